#pragma once

#include "bethecount/bigint.hpp"
#include "bethecount/errors.hpp"
#include "bethecount/poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace bethecount {

// Positive root e_lo - e_hi of an A-type algebra, encoded by the index
// interval 1 <= lo < hi <= r+1. As a sum of simple roots it reads
// alpha_lo + ... + alpha_{hi-1}.
struct PositiveRoot {
    int lo = 0;
    int hi = 0;

    PositiveRoot() = default;
    PositiveRoot(int lo_, int hi_) : lo(lo_), hi(hi_) {
        if (lo < 1 || lo >= hi) throw validation_error("positive root requires 1 <= lo < hi");
    }

    // Exponent vector over the simple roots: 1 on [lo, hi), 0 elsewhere.
    Exponents exponents(int rank) const {
        if (hi > rank + 1) throw validation_error("root does not fit the given rank");
        Exponents e(static_cast<std::size_t>(rank), 0);
        for (int i = lo; i < hi; ++i) e[static_cast<std::size_t>(i - 1)] = 1;
        return e;
    }

    bool operator==(const PositiveRoot& o) const { return lo == o.lo && hi == o.hi; }
    bool operator<(const PositiveRoot& o) const {
        return lo != o.lo ? lo < o.lo : hi < o.hi;
    }

    // "a2" for a simple root, "a2+a3" for a composite interval.
    std::string name() const {
        std::string s;
        for (int i = lo; i < hi; ++i) {
            if (!s.empty()) s += '+';
            s += 'a';
            s += std::to_string(i);
        }
        return s;
    }
};

inline std::vector<PositiveRoot> positive_roots(int rank) {
    if (rank < 0) throw validation_error("rank must be nonnegative");
    std::vector<PositiveRoot> roots;
    roots.reserve(static_cast<std::size_t>(rank) * (rank + 1) / 2);
    for (int lo = 1; lo <= rank; ++lo)
        for (int hi = lo + 1; hi <= rank + 1; ++hi) roots.emplace_back(lo, hi);
    return roots;
}

namespace detail {

// Tiny union-find on 1-based node labels.
class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void join(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

  private:
    std::vector<int> parent_;
};

inline std::vector<std::vector<int>> blocks_from_union(UnionFind& uf, int n) {
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) by_root[static_cast<std::size_t>(uf.find(i))].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& b : by_root)
        if (!b.empty()) blocks.push_back(std::move(b));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

} // namespace detail

// The unbroken-symmetry structure left by a twist pattern (or generated by a
// subset of positive roots): a partition of the chain indices {1,...,r+1}.
// A block of size k+1 carries an A_k summand; blocks need not be contiguous
// (a single preserved root e_1 - e_3 yields the block {1,3} and an A_1).
class SubalgebraDecomposition {
  public:
    static SubalgebraDecomposition from_blocks(int rank, std::vector<std::vector<int>> blocks) {
        SubalgebraDecomposition d;
        d.rank_ = rank;
        std::vector<bool> seen(static_cast<std::size_t>(rank) + 2, false);
        for (auto& b : blocks) {
            if (b.empty()) throw validation_error("empty decomposition block");
            std::sort(b.begin(), b.end());
            for (int i : b) {
                if (i < 1 || i > rank + 1) throw validation_error("block index out of range");
                if (seen[static_cast<std::size_t>(i)])
                    throw validation_error("blocks must partition the index set");
                seen[static_cast<std::size_t>(i)] = true;
            }
        }
        for (int i = 1; i <= rank + 1; ++i)
            if (!seen[static_cast<std::size_t>(i)])
                throw validation_error("blocks must cover every index");
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        d.blocks_ = std::move(blocks);
        return d;
    }

    // The untwisted chain: one block, the full algebra.
    static SubalgebraDecomposition full(int rank) {
        std::vector<int> all(static_cast<std::size_t>(rank) + 1);
        std::iota(all.begin(), all.end(), 1);
        return from_blocks(rank, {all});
    }

    // Fully generic twist: singleton blocks, u(1)^r.
    static SubalgebraDecomposition toral(int rank) {
        std::vector<std::vector<int>> blocks;
        for (int i = 1; i <= rank + 1; ++i) blocks.push_back({i});
        return from_blocks(rank, std::move(blocks));
    }

    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool is_full() const { return blocks_.size() == 1; }
    bool is_toral() const { return static_cast<int>(blocks_.size()) == rank_ + 1; }

    // Every root internal to a block; closed under interval concatenation.
    std::vector<PositiveRoot> preserved_roots() const {
        std::vector<PositiveRoot> roots;
        for (const auto& b : blocks_)
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    roots.emplace_back(b[i], b[j]);
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // A_k ranks of the non-abelian summands, largest first.
    std::vector<int> summand_ranks() const {
        std::vector<int> ranks;
        for (const auto& b : blocks_)
            if (b.size() >= 2) ranks.push_back(static_cast<int>(b.size()) - 1);
        std::sort(ranks.rbegin(), ranks.rend());
        return ranks;
    }

    int u1_count() const {
        int sum = 0;
        for (int k : summand_ranks()) sum += k;
        return rank_ - sum;
    }

    // e.g. "su(2)+su(2)+u(1)", "su(3)", "u(1)^3"
    std::string type_string() const {
        std::string s;
        for (int k : summand_ranks()) {
            if (!s.empty()) s += '+';
            s += "su(" + std::to_string(k + 1) + ")";
        }
        const int u1 = u1_count();
        if (u1 > 0) {
            if (!s.empty()) s += '+';
            s += "u(1)";
            if (u1 > 1) s += "^" + std::to_string(u1);
        }
        if (s.empty()) s = "trivial";
        return s;
    }

    bool operator==(const SubalgebraDecomposition& o) const {
        return rank_ == o.rank_ && blocks_ == o.blocks_;
    }
    bool operator<(const SubalgebraDecomposition& o) const { return blocks_ < o.blocks_; }

  private:
    SubalgebraDecomposition() = default;
    int rank_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// Smallest decomposition whose preserved roots contain the given subset:
// indices are merged along lo ~ hi for each root.
inline SubalgebraDecomposition decomposition_from_subset(int rank,
                                                         const std::vector<PositiveRoot>& dplus) {
    detail::UnionFind uf(rank + 1);
    for (const auto& root : dplus) {
        if (root.hi > rank + 1) throw validation_error("root does not fit the given rank");
        uf.join(root.lo, root.hi);
    }
    return SubalgebraDecomposition::from_blocks(rank, detail::blocks_from_union(uf, rank + 1));
}

// Twist configuration for rank r: for each positive root, whether the total
// twist theta_lo + ... + theta_{hi-1} vanishes modulo full turns. Angles are
// never floats; the pattern is given either by a generating set of vanishing
// combinations, by an explicit per-root flag vector, or by exact rational
// angles (in units of full turns).
class TwistConfiguration {
  public:
    static TwistConfiguration vanishing(int rank, std::vector<PositiveRoot> zeros) {
        TwistConfiguration t;
        t.rank_ = rank;
        t.mode_ = Mode::generators;
        for (const auto& root : zeros)
            if (root.hi > rank + 1) throw validation_error("root does not fit the given rank");
        t.zeros_ = std::move(zeros);
        return t;
    }

    // flags follow the canonical positive_roots(rank) order
    static TwistConfiguration from_flags(int rank, std::vector<bool> zero_flags) {
        TwistConfiguration t;
        t.rank_ = rank;
        t.mode_ = Mode::flags;
        const std::size_t expected = static_cast<std::size_t>(rank) * (rank + 1) / 2;
        if (zero_flags.size() != expected)
            throw validation_error("flag vector must cover every positive root");
        t.flags_ = std::move(zero_flags);
        return t;
    }

    static TwistConfiguration from_angles(int rank, std::vector<Rat> turns) {
        TwistConfiguration t;
        t.rank_ = rank;
        t.mode_ = Mode::angles;
        if (turns.size() != static_cast<std::size_t>(rank))
            throw validation_error("expected one angle per simple root");
        for (auto& a : turns) a.canonicalize();
        t.turns_ = std::move(turns);
        return t;
    }

    int rank() const { return rank_; }

    friend SubalgebraDecomposition preserved_roots(int rank, const TwistConfiguration& twists);

  private:
    enum class Mode { generators, flags, angles };

    TwistConfiguration() = default;
    int rank_ = 0;
    Mode mode_ = Mode::generators;
    std::vector<PositiveRoot> zeros_;
    std::vector<bool> flags_;
    std::vector<Rat> turns_;
};

namespace detail {

inline Rat fractional_part(const Rat& x) {
    Rat f;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    f = x - Rat(q);
    f.canonicalize();
    return f;
}

} // namespace detail

// Decomposition whose blocks are the classes of i ~ j whenever the twist sum
// over [i, j) vanishes. An explicit flag vector must already be transitively
// closed, otherwise no angle assignment realizes it and we refuse.
inline SubalgebraDecomposition preserved_roots(int rank, const TwistConfiguration& twists) {
    if (twists.rank() != rank) throw validation_error("twist configuration rank mismatch");
    using Mode = TwistConfiguration::Mode;
    detail::UnionFind uf(rank + 1);
    switch (twists.mode_) {
    case Mode::generators:
        for (const auto& root : twists.zeros_) uf.join(root.lo, root.hi);
        break;
    case Mode::flags: {
        const auto all = positive_roots(rank);
        for (std::size_t i = 0; i < all.size(); ++i)
            if (twists.flags_[i]) uf.join(all[i].lo, all[i].hi);
        for (std::size_t i = 0; i < all.size(); ++i)
            if (!twists.flags_[i] && uf.find(all[i].lo) == uf.find(all[i].hi))
                throw validation_error("inconsistent zero pattern: root " + all[i].name() +
                                       " is forced to vanish by the flagged roots");
        break;
    }
    case Mode::angles: {
        // phi_i - phi_j = theta_i + ... + theta_{j-1}; group by the prefix
        // sums' fractional parts.
        std::vector<Rat> prefix(static_cast<std::size_t>(rank) + 1, Rat(0));
        for (int i = 1; i <= rank; ++i)
            prefix[static_cast<std::size_t>(i)] =
                prefix[static_cast<std::size_t>(i - 1)] + twists.turns_[static_cast<std::size_t>(i - 1)];
        for (int i = 1; i <= rank + 1; ++i)
            for (int j = i + 1; j <= rank + 1; ++j)
                if (detail::fractional_part(prefix[static_cast<std::size_t>(i - 1)]) ==
                    detail::fractional_part(prefix[static_cast<std::size_t>(j - 1)]))
                    uf.join(i, j);
        break;
    }
    }
    return SubalgebraDecomposition::from_blocks(rank, detail::blocks_from_union(uf, rank + 1));
}

// ---------------------------------------------------------------------------
// sl(m|n) root data in the distinguished simple root system
//   alpha_i = e_i - e_{i+1}   (i = 1..m-1)
//   beta_l  = f_l - f_{l+1}   (l = 1..n-1)
//   delta   = e_m - f_1
// Formal variables t_1..t_{m+n-1} are attached to the simple roots in the
// order alpha_1..alpha_{m-1}, beta_1..beta_{n-1}, delta.
// ---------------------------------------------------------------------------

enum class RootParity { even, odd };

struct SuperPositiveRoot {
    enum class Kind { ee, ff, ef }; // e_i - e_j, f_k - f_l, e_i - f_k

    RootParity parity = RootParity::even;
    Kind kind = Kind::ee;
    int first = 0;
    int second = 0;

    Exponents exponents(int m, int n) const {
        const int arity = m + n - 1;
        Exponents e(static_cast<std::size_t>(arity), 0);
        auto alpha = [&](int i) { return static_cast<std::size_t>(i - 1); };       // i in 1..m-1
        auto beta = [&](int l) { return static_cast<std::size_t>(m - 1 + l - 1); }; // l in 1..n-1
        const std::size_t delta = static_cast<std::size_t>(arity - 1);
        switch (kind) {
        case Kind::ee:
            for (int i = first; i < second; ++i) e[alpha(i)] = 1;
            break;
        case Kind::ff:
            for (int l = first; l < second; ++l) e[beta(l)] = 1;
            break;
        case Kind::ef:
            for (int i = first; i < m; ++i) e[alpha(i)] = 1;
            e[delta] = 1;
            for (int l = 1; l < second; ++l) e[beta(l)] = 1;
            break;
        }
        return e;
    }

    std::string name() const {
        auto sub = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
        switch (kind) {
        case Kind::ee: return sub('e', first) + "-" + sub('e', second);
        case Kind::ff: return sub('f', first) + "-" + sub('f', second);
        case Kind::ef: return sub('e', first) + "-" + sub('f', second);
        }
        return {};
    }
};

inline std::vector<SuperPositiveRoot> super_positive_roots(int m, int n) {
    if (m < 1 || n < 1) throw validation_error("sl(m|n) requires m >= 1 and n >= 1");
    std::vector<SuperPositiveRoot> roots;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            roots.push_back({RootParity::even, SuperPositiveRoot::Kind::ee, i, j});
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            roots.push_back({RootParity::even, SuperPositiveRoot::Kind::ff, k, l});
    for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= n; ++k)
            roots.push_back({RootParity::odd, SuperPositiveRoot::Kind::ef, i, k});
    return roots;
}

} // namespace bethecount
