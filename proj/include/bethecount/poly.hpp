#pragma once

#include "bethecount/bigint.hpp"
#include "bethecount/errors.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bethecount {

// Exponent vectors have a fixed arity per polynomial and nonnegative entries.
using Exponents = std::vector<int>;

// Magnon charge vectors share the representation but may carry negative or
// unordered entries; those map to coefficient 0 rather than an error.
using MagnonVector = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

// Canonical term order: total degree first, ties broken lexicographically
// with the larger leading exponent first. This reproduces the usual way
// difference stencils are written out, e.g. for rank 2:
//   1, t1, t2, t1^2*t2, t1*t2^2, t1^2*t2^2
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Componentwise truncation window. Monomials with any exponent above the
// bound are discarded during arithmetic; since all exponents are
// nonnegative, dropping them never affects the coefficients that remain
// inside the box.
class DegreeBox {
  public:
    explicit DegreeBox(std::vector<int> limits) : limits_(std::move(limits)) {
        for (int b : limits_)
            if (b < 0) throw validation_error("degree box bounds must be nonnegative");
    }

    // Smallest box containing a magnon vector (negative entries clamp to 0).
    static DegreeBox cover(const MagnonVector& m) {
        std::vector<int> limits(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) limits[i] = std::max(m[i], 0);
        return DegreeBox(std::move(limits));
    }

    int arity() const { return static_cast<int>(limits_.size()); }
    const std::vector<int>& limits() const { return limits_; }

    bool contains(const Exponents& e) const {
        for (std::size_t i = 0; i < limits_.size(); ++i)
            if (e[i] > limits_[i]) return false;
        return true;
    }

    bool covers(const MagnonVector& m) const {
        for (std::size_t i = 0; i < limits_.size(); ++i)
            if (m[i] > limits_[i]) return false;
        return true;
    }

  private:
    std::vector<int> limits_;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. No zero coefficients are stored and terms are kept in the
// canonical order, so iteration (and hence serialization) is deterministic.
class SignedPolynomial {
  public:
    using TermMap = std::map<Exponents, Int, TermOrder>;

    explicit SignedPolynomial(int arity) : arity_(arity) {
        if (arity < 0) throw validation_error("polynomial arity must be nonnegative");
    }

    static SignedPolynomial zero(int arity) { return SignedPolynomial(arity); }

    static SignedPolynomial one(int arity) {
        SignedPolynomial p(arity);
        p.terms_.emplace(Exponents(static_cast<std::size_t>(arity), 0), Int(1));
        return p;
    }

    static SignedPolynomial monomial(Exponents e, Int coeff = Int(1)) {
        SignedPolynomial p(static_cast<int>(e.size()));
        if (coeff != 0) {
            p.check_key(e);
            p.terms_.emplace(std::move(e), std::move(coeff));
        }
        return p;
    }

    static SignedPolynomial from_terms(int arity,
                                       std::initializer_list<std::pair<Exponents, long>> terms) {
        SignedPolynomial p(arity);
        for (const auto& [e, c] : terms) p.add_term(e, Int(c));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coefficient(const Exponents& e) const {
        if (static_cast<int>(e.size()) != arity_)
            throw validation_error("coefficient query arity mismatch");
        for (int v : e)
            if (v < 0) return Int(0);
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int constant_term() const {
        return coefficient(Exponents(static_cast<std::size_t>(arity_), 0));
    }

    // Accumulates; drops the entry if the running coefficient reaches zero.
    void add_term(const Exponents& e, const Int& coeff) {
        if (coeff == 0) return;
        check_key(e);
        auto [it, inserted] = terms_.emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Value at x_i = 1 for all i, i.e. the sum of all coefficients.
    Int evaluate_ones() const {
        Int s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    SignedPolynomial truncated(const DegreeBox& box) const {
        if (box.arity() != arity_) throw validation_error("degree box arity mismatch");
        SignedPolynomial p(arity_);
        for (const auto& [e, c] : terms_)
            if (box.contains(e)) p.terms_.emplace(e, c);
        return p;
    }

    bool operator==(const SignedPolynomial& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }
    bool operator!=(const SignedPolynomial& other) const { return !(*this == other); }

    friend SignedPolynomial add(const SignedPolynomial& a, const SignedPolynomial& b);
    friend SignedPolynomial sub(const SignedPolynomial& a, const SignedPolynomial& b);
    friend SignedPolynomial mul(const SignedPolynomial& a, const SignedPolynomial& b,
                                const std::optional<DegreeBox>& box);
    friend SignedPolynomial scale(const SignedPolynomial& a, const Int& k);

  private:
    void check_key(const Exponents& e) const {
        if (static_cast<int>(e.size()) != arity_)
            throw validation_error("exponent vector arity mismatch");
        for (int v : e)
            if (v < 0) throw validation_error("exponents must be nonnegative");
    }

    int arity_;
    TermMap terms_;
};

inline SignedPolynomial add(const SignedPolynomial& a, const SignedPolynomial& b) {
    if (a.arity_ != b.arity_) throw validation_error("polynomial arity mismatch in add");
    SignedPolynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

inline SignedPolynomial scale(const SignedPolynomial& a, const Int& k) {
    SignedPolynomial r(a.arity_);
    if (k == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * k);
    return r;
}

inline SignedPolynomial sub(const SignedPolynomial& a, const SignedPolynomial& b) {
    return add(a, scale(b, Int(-1)));
}

inline SignedPolynomial mul(const SignedPolynomial& a, const SignedPolynomial& b,
                            const std::optional<DegreeBox>& box = std::nullopt) {
    if (a.arity_ != b.arity_) throw validation_error("polynomial arity mismatch in mul");
    if (box && box->arity() != a.arity_) throw validation_error("degree box arity mismatch");
    SignedPolynomial r(a.arity_);
    Exponents e(static_cast<std::size_t>(a.arity_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool inside = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (box && e[i] > box->limits()[i]) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            auto [it, inserted] = r.terms_.emplace(e, ca);
            if (inserted) {
                it->second = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

// Repeated squaring. Truncating intermediates against the box is sound
// because exponents never decrease in products of nonnegative-exponent
// polynomials.
inline SignedPolynomial pow(const SignedPolynomial& a, long k,
                            const std::optional<DegreeBox>& box = std::nullopt) {
    if (k < 0) throw validation_error("negative polynomial power");
    SignedPolynomial result = SignedPolynomial::one(a.arity());
    SignedPolynomial base = box ? a.truncated(*box) : a;
    while (k > 0) {
        if (k & 1) result = mul(result, base, box);
        k >>= 1;
        if (k > 0) base = mul(base, base, box);
    }
    return result;
}

// Multiplicative inverse of a as a truncated series: mul(a, result, box) == 1
// within the box. Requires constant term +1 or -1. Computed by summing the
// geometric series in (1 - c0*a), which nilpotents out of the box.
inline SignedPolynomial series_reciprocal(const SignedPolynomial& a, const DegreeBox& box) {
    if (box.arity() != a.arity()) throw validation_error("degree box arity mismatch");
    const Int c0 = a.constant_term();
    if (c0 != 1 && c0 != -1)
        throw validation_error("series reciprocal requires constant term +1 or -1");
    const SignedPolynomial unit = SignedPolynomial::one(a.arity());
    SignedPolynomial u = sub(unit, scale(a.truncated(box), c0));
    SignedPolynomial acc = unit;
    SignedPolynomial term = unit;
    while (true) {
        term = mul(term, u, box);
        if (term.is_zero()) break;
        acc = add(acc, term);
    }
    return scale(acc, c0);
}

inline SignedPolynomial operator+(const SignedPolynomial& a, const SignedPolynomial& b) {
    return add(a, b);
}
inline SignedPolynomial operator-(const SignedPolynomial& a, const SignedPolynomial& b) {
    return sub(a, b);
}
inline SignedPolynomial operator*(const SignedPolynomial& a, const SignedPolynomial& b) {
    return mul(a, b);
}

} // namespace bethecount
