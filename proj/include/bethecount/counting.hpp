#pragma once

#include "bethecount/bigint.hpp"
#include "bethecount/characters.hpp"
#include "bethecount/errors.hpp"
#include "bethecount/occupancy.hpp"
#include "bethecount/poly.hpp"
#include "bethecount/rootsys.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace bethecount {

// ---------------------------------------------------------------------------
// Young diagrams and dimension formulas
// ---------------------------------------------------------------------------

struct YoungDiagram {
    std::vector<long> parts; // weakly decreasing, nonnegative

    explicit YoungDiagram(std::vector<long> p) : parts(std::move(p)) {
        long prev = -1;
        for (long v : parts) {
            if (v < 0 || (prev >= 0 && v > prev))
                throw validation_error("Young diagram rows must be weakly decreasing and nonnegative");
            prev = v;
        }
    }

    long total() const {
        long s = 0;
        for (long v : parts) s += v;
        return s;
    }
    int rows() const { return static_cast<int>(parts.size()); }

    bool operator==(const YoungDiagram& o) const { return parts == o.parts; }
};

// Candidate rows (2sL - M_1, M_1 - M_2, ..., M_r) before any validity check.
inline std::vector<long> candidate_rows(long total_boxes, const MagnonVector& m) {
    std::vector<long> rows(m.size() + 1);
    rows[0] = total_boxes - (m.empty() ? 0 : m[0]);
    for (std::size_t i = 0; i + 1 < m.size(); ++i) rows[i + 1] = m[i] - m[i + 1];
    if (!m.empty()) rows[m.size()] = m.back();
    return rows;
}

inline bool weakly_decreasing_nonneg(const std::vector<long>& rows) {
    long prev = -1;
    for (long v : rows) {
        if (v < 0 || (prev >= 0 && v > prev)) return false;
        prev = v;
    }
    return true;
}

// The diagram (2sL - M_1, M_1 - M_2, ..., M_r), or nothing when the magnon
// charges violate the highest-weight conditions.
inline std::optional<YoungDiagram> young_from_magnons(const SpinChainSpec& spec,
                                                      const MagnonVector& m) {
    validate(spec);
    if (static_cast<int>(m.size()) != spec.rank) return std::nullopt;
    auto rows = candidate_rows(static_cast<long>(spec.twos) * spec.length, m);
    if (!weakly_decreasing_nonneg(rows)) return std::nullopt;
    return YoungDiagram(std::move(rows));
}

// Number of standard Young tableaux of the shape, written with the hooks
// h_i = lambda_i + (#rows) - i:  |lambda|! / prod h_i! * prod_{i<j} (h_i - h_j).
inline Int hook_length_mu(const YoungDiagram& lam) {
    const int n = lam.rows();
    std::vector<long> hooks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        hooks[static_cast<std::size_t>(i)] = lam.parts[static_cast<std::size_t>(i)] + n - 1 - i;
    Int num = factorial(lam.total());
    Int den(1);
    for (long h : hooks) den *= factorial(h);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            num *= Int(hooks[static_cast<std::size_t>(i)] - hooks[static_cast<std::size_t>(j)]);
    return num / den;
}

// Weyl dimension of the A_rank irrep with highest weight lambda (padded with
// zero rows to rank+1): prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
inline Int dim_irrep(const YoungDiagram& lam, int rank) {
    if (lam.rows() > rank + 1) throw validation_error("diagram has more than rank+1 rows");
    std::vector<long> parts(lam.parts);
    parts.resize(static_cast<std::size_t>(rank) + 1, 0);
    Int num(1), den(1);
    for (int i = 0; i < rank + 1; ++i) {
        for (int j = i + 1; j < rank + 1; ++j) {
            num *= Int(parts[static_cast<std::size_t>(i)] - parts[static_cast<std::size_t>(j)] + j - i);
            den *= Int(j - i);
        }
    }
    return num / den;
}

// ---------------------------------------------------------------------------
// Branching: rows of lambda grouped by decomposition block
// ---------------------------------------------------------------------------

struct BranchedComponent {
    std::vector<int> row_indices; // 1-based rows of the parent diagram
    std::vector<long> rows;       // the extracted row lengths, parent order

    bool is_u1() const { return rows.size() == 1; }
};

struct BranchedLabel {
    std::vector<BranchedComponent> components; // block order
    bool valid = false;                        // every component weakly decreasing, rows >= 0
};

inline BranchedLabel branch_label(long total_boxes, const MagnonVector& m,
                                  const SubalgebraDecomposition& decomp) {
    if (static_cast<int>(m.size()) != decomp.rank())
        throw validation_error("magnon vector arity mismatch in branching");
    const auto rows = candidate_rows(total_boxes, m);
    BranchedLabel label;
    label.valid = true;
    for (const auto& block : decomp.blocks()) {
        BranchedComponent comp;
        for (int idx : block) {
            comp.row_indices.push_back(idx);
            comp.rows.push_back(rows[static_cast<std::size_t>(idx - 1)]);
        }
        if (!weakly_decreasing_nonneg(comp.rows)) label.valid = false;
        label.components.push_back(std::move(comp));
    }
    return label;
}

inline BranchedLabel branch_label(const SpinChainSpec& spec, const MagnonVector& m,
                                  const SubalgebraDecomposition& decomp) {
    validate(spec);
    return branch_label(static_cast<long>(spec.twos) * spec.length, m, decomp);
}

// Product of component dimensions; one-row (u(1)) components contribute 1.
inline Int dim_branched(const BranchedLabel& label) {
    if (!label.valid) throw validation_error("invalid branched label has no dimension");
    Int dim(1);
    for (const auto& comp : label.components) {
        if (comp.is_u1()) continue;
        dim *= dim_irrep(YoungDiagram(comp.rows), static_cast<int>(comp.rows.size()) - 1);
    }
    return dim;
}

// ---------------------------------------------------------------------------
// Multiplicities via the difference stencil
// ---------------------------------------------------------------------------

// Expand-once coefficient store for one chain; reads are O(log) lookups.
class CoefficientTable {
  public:
    explicit CoefficientTable(const SpinChainSpec& spec)
        : spec_(spec), poly_(occupancy_poly(spec)) {}

    const SpinChainSpec& spec() const { return spec_; }

    Int at(const MagnonVector& m) const {
        for (int v : m)
            if (v < 0) return Int(0);
        return poly_.coefficient(m);
    }

    std::function<Int(const MagnonVector&)> fn() const {
        return [this](const MagnonVector& m) { return at(m); };
    }

  private:
    SpinChainSpec spec_;
    SignedPolynomial poly_;
};

// Shared core: branching validity first (charges outside the highest-weight
// cone count zero states by definition), then the signed difference stencil.
// A negative at a valid label is a bug somewhere, never a result.
inline Int mu_from_fn(const std::function<Int(const MagnonVector&)>& c, long total_boxes,
                      const SubalgebraDecomposition& decomp, const MagnonVector& m) {
    const auto label = branch_label(total_boxes, m, decomp);
    if (!label.valid) return Int(0);
    const CharacterInverse inv = partial_inverse(decomp, decomp.rank());
    Int value = apply_shift(inv, c, m);
    if (value < 0)
        throw consistency_error("negative multiplicity: stencil or coefficients are wrong");
    return value;
}

inline Int mu_partial(const CoefficientTable& table, const MagnonVector& m,
                      const SubalgebraDecomposition& decomp) {
    const auto& spec = table.spec();
    return mu_from_fn(table.fn(), static_cast<long>(spec.twos) * spec.length, decomp, m);
}

inline Int mu_partial(const SpinChainSpec& spec, const MagnonVector& m,
                      const SubalgebraDecomposition& decomp) {
    validate(spec);
    if (static_cast<int>(m.size()) != spec.rank)
        throw validation_error("magnon vector arity mismatch");
    // Single query: expand the generating function only inside the box
    // spanned by m; every stencil probe stays inside it.
    const auto label = branch_label(spec, m, decomp);
    if (!label.valid) return Int(0);
    const DegreeBox box = DegreeBox::cover(m);
    const SignedPolynomial g = pow(site_factor(spec.rank, spec.twos), spec.length, box);
    auto c = [&](const MagnonVector& probe) {
        for (int v : probe)
            if (v < 0) return Int(0);
        return g.coefficient(probe);
    };
    return mu_from_fn(c, static_cast<long>(spec.twos) * spec.length, decomp, m);
}

inline Int mu_untwisted(const SpinChainSpec& spec, const MagnonVector& m) {
    return mu_partial(spec, m, SubalgebraDecomposition::full(spec.rank));
}

inline Int mu_untwisted(const CoefficientTable& table, const MagnonVector& m) {
    return mu_partial(table, m, SubalgebraDecomposition::full(table.spec().rank));
}

// ---------------------------------------------------------------------------
// Tables and completeness
// ---------------------------------------------------------------------------

struct TableRow {
    MagnonVector m;
    BranchedLabel label;
    Int mu;
    Int dim;
};

// All valid labels in canonical magnon order. With the toral decomposition
// every in-domain charge is a valid label and mu degenerates to c.
inline std::vector<TableRow> mu_table(const SpinChainSpec& spec,
                                      const SubalgebraDecomposition& decomp, int threads = 1) {
    validate(spec);
    if (decomp.rank() != spec.rank) throw validation_error("decomposition rank mismatch");
    const CoefficientTable table(spec);
    const CharacterInverse inv = partial_inverse(decomp, spec.rank);
    const long total_boxes = static_cast<long>(spec.twos) * spec.length;
    const auto domain = magnon_domain(spec);

    std::vector<std::optional<TableRow>> slots(domain.size());
    auto work = [&](std::size_t i) {
        const auto& m = domain[i];
        auto label = branch_label(total_boxes, m, decomp);
        if (!label.valid) return;
        Int mu = apply_shift(inv, table.fn(), m);
        if (mu < 0)
            throw consistency_error("negative multiplicity: stencil or coefficients are wrong");
        Int dim = dim_branched(label);
        slots[i] = TableRow{m, std::move(label), std::move(mu), std::move(dim)};
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < domain.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < domain.size();
                         i = next.fetch_add(1))
                        work(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    std::vector<TableRow> rows;
    for (auto& slot : slots)
        if (slot) rows.push_back(std::move(*slot));
    return rows;
}

inline std::vector<TableRow> c_table(const SpinChainSpec& spec, int threads = 1) {
    return mu_table(spec, SubalgebraDecomposition::toral(spec.rank), threads);
}

struct CompletenessReport {
    Int total{0};
    Int target{0};
    bool pass = false;
    long labels = 0;
};

// sum of mu * dim over all valid labels against binom(2s+r, r)^L.
inline CompletenessReport completeness_check(const SpinChainSpec& spec,
                                             const SubalgebraDecomposition& decomp,
                                             int threads = 1) {
    CompletenessReport report;
    report.target = total_states(spec);
    for (const auto& row : mu_table(spec, decomp, threads)) {
        report.total += row.mu * row.dim;
        ++report.labels;
    }
    report.pass = report.total == report.target;
    return report;
}

// ---------------------------------------------------------------------------
// sl(1|1) and sl(1|2)
// ---------------------------------------------------------------------------

enum class SuperKind { sl11, sl12 };

inline int super_arity(SuperKind kind) { return kind == SuperKind::sl11 ? 1 : 2; }

// Highest-weight labels are hook-shaped diagrams: (T - M, 1^M) for sl(1|1)
// with T = 2sL boxes, and (L - M1, M1 - M2, 1^M2) for sl(1|2).
inline std::vector<long> super_label_rows(SuperKind kind, int twos, int length,
                                          const MagnonVector& m) {
    if (static_cast<int>(m.size()) != super_arity(kind))
        throw validation_error("magnon vector arity mismatch for superalgebra");
    std::vector<long> rows;
    if (kind == SuperKind::sl11) {
        rows.push_back(static_cast<long>(twos) * length - m[0]);
        rows.insert(rows.end(), static_cast<std::size_t>(std::max(m[0], 0)), 1);
    } else {
        rows.push_back(static_cast<long>(length) - m[0]);
        rows.push_back(static_cast<long>(m[0]) - m[1]);
        rows.insert(rows.end(), static_cast<std::size_t>(std::max(m[1], 0)), 1);
    }
    return rows;
}

inline bool super_label_valid(SuperKind kind, int twos, int length, const MagnonVector& m) {
    if (static_cast<int>(m.size()) != super_arity(kind)) return false;
    for (int v : m)
        if (v < 0) return false;
    return weakly_decreasing_nonneg(super_label_rows(kind, twos, length, m));
}

// Counting formula with the superalgebra character inverse, expanded as a
// series inside the box spanned by m. The sum is exactly finite because the
// coefficient functions vanish at negative arguments. Charges outside the
// hook-shaped label cone count zero states, mirroring the classical
// invalid-weight convention.
inline Int mu_super(SuperKind kind, int twos, int length, const MagnonVector& m) {
    if (twos < 1) throw validation_error("twos must be at least 1");
    if (length < 1) throw validation_error("length must be at least 1");
    if (static_cast<int>(m.size()) != super_arity(kind))
        throw validation_error("magnon vector arity mismatch for superalgebra");
    if (!super_label_valid(kind, twos, length, m)) return Int(0);

    const DegreeBox box = DegreeBox::cover(m);
    std::function<Int(const MagnonVector&)> f;
    CharacterInverse inv = kind == SuperKind::sl11 ? super_inverse(1, 1, box)
                                                   : super_inverse(1, 2, box);
    SignedPolynomial g = SignedPolynomial::zero(1);
    if (kind == SuperKind::sl11) {
        g = pow(site_factor(1, twos), length, box);
        f = [&g](const MagnonVector& probe) {
            if (probe[0] < 0) return Int(0);
            return g.coefficient(probe);
        };
    } else {
        f = [twos, length](const MagnonVector& probe) {
            return tj_c(twos, length, probe[0], probe[1]);
        };
    }
    Int value = apply_shift(inv, f, m);
    if (value < 0)
        throw consistency_error("negative super multiplicity: stencil or coefficients are wrong");
    return value;
}

// Module dimensions entering the completeness sums: every sl(1|1) module
// contributes 2; sl(1|2) modules have dimension 2L+1 at M1 = M2 = 0 and
// 4(L - 2M1 + M2 + 1) otherwise.
inline Int dim_super(SuperKind kind, int length, const MagnonVector& m) {
    if (static_cast<int>(m.size()) != super_arity(kind))
        throw validation_error("magnon vector arity mismatch for superalgebra");
    if (kind == SuperKind::sl11) return Int(2);
    const long len = length;
    if (m[0] == 0 && m[1] == 0) return Int(2 * len + 1);
    return Int(4) * Int(len - 2 * m[0] + m[1] + 1);
}

// Completeness against the twisted state totals: (2s+1)^L for sl(1|1)-type
// occupancy chains and (2s+2)^L for the t-J family; at s = 1/2 these are the
// familiar 2^L and 3^L. The sl(1|1) sum runs over M = 0..L-1.
inline CompletenessReport super_completeness(SuperKind kind, int twos, int length) {
    if (twos < 1) throw validation_error("twos must be at least 1");
    if (length < 1) throw validation_error("length must be at least 1");
    CompletenessReport report;
    if (kind == SuperKind::sl11) {
        report.target = int_pow(Int(twos + 1), static_cast<unsigned long>(length));
        for (int m = 0; m < length; ++m) {
            report.total += mu_super(kind, twos, length, {m}) * dim_super(kind, length, {m});
            ++report.labels;
        }
    } else {
        report.target = int_pow(Int(twos + 2), static_cast<unsigned long>(length));
        for (int m1 = 0; m1 <= length; ++m1) {
            for (int m2 = 0; m2 <= twos * m1; ++m2) {
                const MagnonVector m{m1, m2};
                if (!super_label_valid(kind, twos, length, m)) continue;
                report.total += mu_super(kind, twos, length, m) * dim_super(kind, length, m);
                ++report.labels;
            }
        }
    }
    report.pass = report.total == report.target;
    return report;
}

// ---------------------------------------------------------------------------
// Character-peeling oracle
// ---------------------------------------------------------------------------

namespace detail {

// Partitions of total into at most max_parts parts, descending lex order.
inline std::vector<std::vector<int>> partitions_desc(int total, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int bound) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int part = std::min(bound, remaining); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out; // already descending lex: larger first parts come first
}

inline MagnonVector magnons_from_partition(const std::vector<int>& lambda, int rank) {
    MagnonVector m(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < rank; ++i) {
        int suffix = 0;
        for (std::size_t j = static_cast<std::size_t>(i + 1); j < lambda.size(); ++j)
            suffix += lambda[j];
        m[static_cast<std::size_t>(i)] = suffix;
    }
    return m;
}

} // namespace detail

// Independent multiplicity oracle: start from the weight-multiplicity table
// of the L-fold tensor power (the c table on the weight lattice) and peel
// off irreducible weight tables in dominance order, recording how many
// copies of each came out. No difference stencil is involved.
inline std::map<MagnonVector, Int> mu_oracle_table(const SpinChainSpec& spec,
                                                   long guard = 5'000'000) {
    validate(spec);
    const int total_boxes = spec.twos * spec.length;
    const auto candidates = detail::partitions_desc(total_boxes, spec.rank + 1);

    std::map<MagnonVector, Int> residual;
    {
        const SignedPolynomial g = occupancy_poly(spec);
        if (static_cast<long>(candidates.size()) * static_cast<long>(g.term_count()) > guard)
            throw guard_error("character peeling instance too large");
        for (const auto& [e, c] : g.terms()) residual.emplace(e, c);
    }

    std::map<MagnonVector, Int> mu;
    for (const auto& lambda : candidates) {
        const MagnonVector at = detail::magnons_from_partition(lambda, spec.rank);
        auto it = residual.find(at);
        const Int count = it == residual.end() ? Int(0) : it->second;
        if (count < 0) throw consistency_error("negative residual multiplicity while peeling");
        if (count == 0) {
            mu.emplace(at, Int(0));
            continue;
        }
        const SignedPolynomial w = schur_specialized(lambda, spec.rank);
        for (const auto& [e, k] : w.terms()) {
            auto rit = residual.find(e);
            if (rit == residual.end())
                throw consistency_error("irrep weight outside the tensor-power support");
            rit->second -= count * k;
        }
        mu.emplace(at, count);
    }
    for (const auto& [e, c] : residual)
        if (c != 0) throw consistency_error("nonzero residue after character peeling");
    return mu;
}

inline Int mu_oracle(const SpinChainSpec& spec, const MagnonVector& m, long guard = 5'000'000) {
    const auto table = mu_oracle_table(spec, guard);
    auto it = table.find(m);
    return it == table.end() ? Int(0) : it->second;
}

} // namespace bethecount
