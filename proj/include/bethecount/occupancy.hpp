#pragma once

#include "bethecount/bigint.hpp"
#include "bethecount/errors.hpp"
#include "bethecount/poly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace bethecount {

// A-type chain: rank r, spin stored as the integer 2s, length L. Half-integer
// spins never touch non-integer arithmetic.
struct SpinChainSpec {
    int rank = 1;
    int twos = 1;
    int length = 1;
};

inline void validate(const SpinChainSpec& spec) {
    if (spec.rank < 1) throw validation_error("rank must be at least 1");
    if (spec.twos < 1) throw validation_error("twos must be at least 1");
    if (spec.length < 1) throw validation_error("length must be at least 1");
}

inline bool in_domain(const SpinChainSpec& spec, const MagnonVector& m) {
    if (static_cast<int>(m.size()) != spec.rank) return false;
    int prev = spec.twos * spec.length;
    for (int v : m) {
        if (v < 0 || v > prev) return false;
        prev = v;
    }
    return true;
}

// All magnon vectors with 2sL >= M_1 >= ... >= M_r >= 0, in the canonical
// term order.
inline std::vector<MagnonVector> magnon_domain(const SpinChainSpec& spec) {
    validate(spec);
    std::vector<MagnonVector> out;
    MagnonVector m(static_cast<std::size_t>(spec.rank), 0);
    const int top = spec.twos * spec.length;
    std::function<void(int, int)> walk = [&](int layer, int bound) {
        if (layer == spec.rank) {
            out.push_back(m);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            m[static_cast<std::size_t>(layer)] = v;
            walk(layer + 1, v);
        }
    };
    walk(0, top);
    std::sort(out.begin(), out.end(), TermOrder{});
    return out;
}

// One-row specialized Schur polynomial S_(k)(1, x_1, x_1 x_2, ..., x_1...x_r):
// the sum over weakly decreasing tuples k >= n_1 >= ... >= n_r >= 0 of
// prod x_a^{n_a}. Every coefficient is 1; the term count is binom(k+r, r).
// This is also the complete homogeneous polynomial h_k at the same values.
// Cached per (rank, k); the cache only ever grows, so references stay valid.
inline const SignedPolynomial& site_factor(int rank, int twos) {
    if (rank < 1) throw validation_error("rank must be at least 1");
    if (twos < 0) throw validation_error("twos must be nonnegative");
    static std::map<std::pair<int, int>, SignedPolynomial> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({rank, twos});
    if (it != cache.end()) return it->second;

    SignedPolynomial p(rank);
    Exponents e(static_cast<std::size_t>(rank), 0);
    std::function<void(int, int)> walk = [&](int layer, int bound) {
        if (layer == rank) {
            p.add_term(e, Int(1));
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            e[static_cast<std::size_t>(layer)] = v;
            walk(layer + 1, v);
        }
    };
    walk(0, twos);
    return cache.emplace(std::make_pair(rank, twos), std::move(p)).first->second;
}

// S_lambda(1, x_1, ..., x_1...x_r) for an arbitrary partition, via the
// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) expanded over
// permutations. Division-free: the bialternant ratio would need polynomial
// division at a specialization point this close to degenerate.
inline SignedPolynomial schur_specialized(const std::vector<int>& lambda, int rank) {
    if (rank < 1) throw validation_error("rank must be at least 1");
    if (static_cast<int>(lambda.size()) > rank + 1)
        throw validation_error("partition has more than rank+1 parts");
    int prev = -1;
    for (int part : lambda) {
        if (part < 0 || (prev >= 0 && part > prev))
            throw validation_error("not a partition");
        prev = part;
    }
    std::vector<int> parts = lambda;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (parts.empty()) return SignedPolynomial::one(rank);

    const int n = static_cast<int>(parts.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = j;
    SignedPolynomial result(rank);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        bool zero = false;
        SignedPolynomial prod = SignedPolynomial::one(rank);
        for (int i = 0; i < n && !zero; ++i) {
            const int k = parts[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
            if (k < 0) {
                zero = true;
            } else if (k > 0) {
                prod = mul(prod, site_factor(rank, k));
            }
        }
        if (!zero) result = (inversions % 2 == 0) ? add(result, prod) : sub(result, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// Full expansion of the chain's generating function, site_factor^L. Used by
// table builders that read many coefficients from one expansion.
inline SignedPolynomial occupancy_poly(const SpinChainSpec& spec) {
    validate(spec);
    return pow(site_factor(spec.rank, spec.twos), spec.length);
}

// Number of layered box configurations with layer totals M: the coefficient
// of prod x_a^{M_a} in site_factor^L. Single-coefficient queries truncate
// every intermediate product to the box spanned by M.
inline Int c_coefficient(const SpinChainSpec& spec, const MagnonVector& m) {
    validate(spec);
    if (!in_domain(spec, m)) return Int(0);
    const DegreeBox box = DegreeBox::cover(m);
    return pow(site_factor(spec.rank, spec.twos), spec.length, box).coefficient(m);
}

namespace detail {

inline Int per_site_options(const SpinChainSpec& spec) {
    return binomial(spec.twos + spec.rank, spec.rank);
}

// Walks every site column (a weakly decreasing tuple bounded by 2s) and
// tallies the layer totals, pruning once any total overshoots its cap.
template <typename Visit>
void enumerate_configs(const SpinChainSpec& spec, const MagnonVector& cap, Visit&& visit) {
    std::vector<Exponents> columns;
    {
        Exponents col(static_cast<std::size_t>(spec.rank), 0);
        std::function<void(int, int)> walk = [&](int layer, int bound) {
            if (layer == spec.rank) {
                columns.push_back(col);
                return;
            }
            for (int v = 0; v <= bound; ++v) {
                col[static_cast<std::size_t>(layer)] = v;
                walk(layer + 1, v);
            }
        };
        walk(0, spec.twos);
    }
    MagnonVector totals(static_cast<std::size_t>(spec.rank), 0);
    std::function<void(int)> place = [&](int site) {
        if (site == spec.length) {
            visit(totals);
            return;
        }
        for (const auto& col : columns) {
            bool ok = true;
            for (std::size_t a = 0; a < totals.size(); ++a) {
                totals[a] += col[a];
                if (totals[a] > cap[a]) ok = false;
            }
            if (ok) place(site + 1);
            for (std::size_t a = 0; a < totals.size(); ++a) totals[a] -= col[a];
        }
    };
    place(0);
}

} // namespace detail

// Explicit box-count matrix: boxes[a][site] is the number of boxes of layer
// a+1 in the given site's column.
struct OccupancyConfig {
    std::vector<std::vector<int>> boxes; // [layer][site], layers top out at rank

    // layer totals match m, columns weakly decrease upward, bottom layer <= 2s
    bool satisfies(const SpinChainSpec& spec, const MagnonVector& m) const {
        if (static_cast<int>(boxes.size()) != spec.rank) return false;
        for (int a = 0; a < spec.rank; ++a) {
            const auto& layer = boxes[static_cast<std::size_t>(a)];
            if (static_cast<int>(layer.size()) != spec.length) return false;
            long total = 0;
            for (int site = 0; site < spec.length; ++site) {
                const int n = layer[static_cast<std::size_t>(site)];
                if (n < 0) return false;
                if (a == 0 && n > spec.twos) return false;
                if (a > 0 &&
                    n > boxes[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(site)])
                    return false;
                total += n;
            }
            if (total != m[static_cast<std::size_t>(a)]) return false;
        }
        return true;
    }
};

// Materializes every configuration counted by brute_force_c. Meant for small
// instances and invariant checks; the counting walk below avoids building
// the matrices.
inline std::vector<OccupancyConfig> enumerate_occupancies(const SpinChainSpec& spec,
                                                          const MagnonVector& m,
                                                          long guard = 100'000) {
    validate(spec);
    std::vector<OccupancyConfig> out;
    if (!in_domain(spec, m)) return out;
    if (int_pow(detail::per_site_options(spec), static_cast<unsigned long>(spec.length)) > guard)
        throw guard_error("occupancy enumeration too large");

    std::vector<std::vector<int>> boxes(
        static_cast<std::size_t>(spec.rank),
        std::vector<int>(static_cast<std::size_t>(spec.length), 0));
    MagnonVector totals(static_cast<std::size_t>(spec.rank), 0);
    std::function<void(int)> place = [&](int site) {
        if (site == spec.length) {
            if (totals == m) out.push_back({boxes});
            return;
        }
        std::function<void(int, int)> column = [&](int layer, int bound) {
            if (layer == spec.rank) {
                place(site + 1);
                return;
            }
            for (int n = 0; n <= bound; ++n) {
                totals[static_cast<std::size_t>(layer)] += n;
                if (totals[static_cast<std::size_t>(layer)] <= m[static_cast<std::size_t>(layer)]) {
                    boxes[static_cast<std::size_t>(layer)][static_cast<std::size_t>(site)] = n;
                    column(layer + 1, n);
                }
                totals[static_cast<std::size_t>(layer)] -= n;
            }
            boxes[static_cast<std::size_t>(layer)][static_cast<std::size_t>(site)] = 0;
        };
        column(0, spec.twos);
    };
    place(0);
    return out;
}

// Independent oracle for c_coefficient: counts valid configurations by
// direct nested enumeration, no polynomial arithmetic involved.
inline Int brute_force_c(const SpinChainSpec& spec, const MagnonVector& m,
                         long guard = 10'000'000) {
    validate(spec);
    if (!in_domain(spec, m)) return Int(0);
    if (int_pow(detail::per_site_options(spec), static_cast<unsigned long>(spec.length)) > guard)
        throw guard_error("brute-force enumeration too large");
    Int count(0);
    detail::enumerate_configs(spec, m, [&](const MagnonVector& totals) {
        if (totals == m) ++count;
    });
    return count;
}

// One sweep over every configuration, tallying all magnon vectors at once.
inline std::map<MagnonVector, Int> brute_force_c_table(const SpinChainSpec& spec,
                                                       long guard = 10'000'000) {
    validate(spec);
    if (int_pow(detail::per_site_options(spec), static_cast<unsigned long>(spec.length)) > guard)
        throw guard_error("brute-force enumeration too large");
    std::map<MagnonVector, Int> table;
    MagnonVector cap(static_cast<std::size_t>(spec.rank), spec.twos * spec.length);
    detail::enumerate_configs(spec, cap,
                              [&](const MagnonVector& totals) { ++table[totals]; });
    return table;
}

// Chain with per-site highest weights lambda^(n): coefficient of x^M in the
// product of specialized Schur polynomials.
inline Int mixed_c(const std::vector<std::vector<int>>& diagrams, int rank,
                   const MagnonVector& m) {
    if (static_cast<int>(m.size()) != rank) throw validation_error("magnon vector arity mismatch");
    for (int v : m)
        if (v < 0) return Int(0);
    const DegreeBox box = DegreeBox::cover(m);
    SignedPolynomial g = SignedPolynomial::one(rank);
    for (const auto& lambda : diagrams) g = mul(g, schur_specialized(lambda, rank), box);
    return g.coefficient(m);
}

// Uniform spin-s chain of length L with one impurity site of spin s'.
inline Int kondo_c(const SpinChainSpec& bulk, int twos_impurity, const MagnonVector& m) {
    validate(bulk);
    if (twos_impurity < 0) throw validation_error("impurity twos must be nonnegative");
    if (static_cast<int>(m.size()) != bulk.rank)
        throw validation_error("magnon vector arity mismatch");
    for (int v : m)
        if (v < 0) return Int(0);
    const DegreeBox box = DegreeBox::cover(m);
    const SignedPolynomial g =
        mul(schur_specialized({twos_impurity}, bulk.rank),
            pow(site_factor(bulk.rank, bulk.twos), bulk.length, box), box);
    return g.coefficient(m);
}

// Closed form for the same count: the impurity contributes one extra column
// bounded by 2s', so c^K(M) is the sum of bulk coefficients over all shifts
// by weakly decreasing vectors n with n_1 <= 2s'.
inline Int kondo_c_nested(const SpinChainSpec& bulk, int twos_impurity, const MagnonVector& m) {
    validate(bulk);
    if (twos_impurity < 0) throw validation_error("impurity twos must be nonnegative");
    if (static_cast<int>(m.size()) != bulk.rank)
        throw validation_error("magnon vector arity mismatch");
    Int total(0);
    MagnonVector shift(static_cast<std::size_t>(bulk.rank), 0);
    MagnonVector probe(m);
    std::function<void(int, int)> loop = [&](int layer, int bound) {
        if (layer == bulk.rank) {
            for (std::size_t a = 0; a < probe.size(); ++a)
                probe[a] = m[a] - shift[static_cast<std::size_t>(a)];
            total += c_coefficient(bulk, probe);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            shift[static_cast<std::size_t>(layer)] = v;
            loop(layer + 1, v);
        }
    };
    loop(0, twos_impurity);
    return total;
}

// t-J-type count: choose which of the L sites carry the M_1 excitations,
// then solve the rank-1 occupancy problem on those M_1 sites.
inline Int tj_c(int twos, int length, int m1, int m2) {
    if (twos < 1) throw validation_error("twos must be at least 1");
    if (length < 0) throw validation_error("length must be nonnegative");
    if (m1 < 0 || m1 > length || m2 < 0) return Int(0);
    if (m1 == 0) return m2 == 0 ? Int(1) : Int(0);
    if (m2 > twos * m1) return Int(0);
    return binomial(length, m1) * c_coefficient({1, twos, m1}, {m2});
}

// Total number of twisted states: the generating function at x_i = 1, i.e.
// binom(2s+r, r)^L.
inline Int total_states(const SpinChainSpec& spec) {
    validate(spec);
    return int_pow(site_factor(spec.rank, spec.twos).evaluate_ones(),
                   static_cast<unsigned long>(spec.length));
}

} // namespace bethecount
