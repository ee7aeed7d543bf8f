#pragma once

#include "bethecount/bigint.hpp"
#include "bethecount/errors.hpp"
#include "bethecount/poly.hpp"
#include "bethecount/rootsys.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace bethecount {

// Reciprocal of a Verma-module character. For a classical root set this is
// the exact finite product prod (1 - t^alpha); for sl(m|n) the odd factors
// sit in the denominator and the reciprocal is a box-truncated series.
class CharacterInverse {
  public:
    explicit CharacterInverse(SignedPolynomial poly)
        : poly_(std::move(poly)) {}
    CharacterInverse(SignedPolynomial poly, DegreeBox box)
        : poly_(std::move(poly)), box_(std::move(box)) {}

    int arity() const { return poly_.arity(); }
    const SignedPolynomial& poly() const { return poly_; }
    bool is_series() const { return box_.has_value(); }
    const std::optional<DegreeBox>& box() const { return box_; }

  private:
    SignedPolynomial poly_;
    std::optional<DegreeBox> box_;
};

// prod over the given roots of (1 - t^alpha). Expansions are small (at most
// (r+1)! surviving terms for A_r) and reused across every multiplicity
// query, so they are cached per root set.
inline CharacterInverse verma_inverse(const std::vector<PositiveRoot>& roots, int arity) {
    std::vector<PositiveRoot> key = roots;
    std::sort(key.begin(), key.end());
    using CacheKey = std::pair<int, std::vector<std::pair<int, int>>>;
    CacheKey ck{arity, {}};
    for (const auto& root : key) ck.second.emplace_back(root.lo, root.hi);

    static std::map<CacheKey, SignedPolynomial> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(ck);
    if (it == cache.end()) {
        SignedPolynomial p = SignedPolynomial::one(arity);
        for (const auto& root : key) {
            SignedPolynomial factor = SignedPolynomial::one(arity);
            factor.add_term(root.exponents(arity), Int(-1));
            p = mul(p, factor);
        }
        it = cache.emplace(std::move(ck), std::move(p)).first;
    }
    return CharacterInverse(it->second);
}

// Character inverse of the unbroken subalgebra: the product runs over the
// preserved roots only. An all-u(1) decomposition yields 1.
inline CharacterInverse partial_inverse(const SubalgebraDecomposition& decomp, int arity) {
    return verma_inverse(decomp.preserved_roots(), arity);
}

// sl(m|n): prod_even (1 - t^alpha) times the series reciprocal of
// prod_odd (1 + t^alpha), truncated to the box.
inline CharacterInverse super_inverse(int m, int n, const DegreeBox& box) {
    const int arity = m + n - 1;
    if (box.arity() != arity) throw validation_error("degree box arity mismatch");
    SignedPolynomial even = SignedPolynomial::one(arity);
    SignedPolynomial odd = SignedPolynomial::one(arity);
    for (const auto& root : super_positive_roots(m, n)) {
        SignedPolynomial factor = SignedPolynomial::one(arity);
        factor.add_term(root.exponents(m, n),
                        root.parity == RootParity::even ? Int(-1) : Int(1));
        if (root.parity == RootParity::even)
            even = mul(even, factor, box);
        else
            odd = mul(odd, factor, box);
    }
    return CharacterInverse(mul(even, series_reciprocal(odd, box), box), box);
}

// The character itself as a box-truncated series (used by reconstruction
// identities and unit tests).
inline SignedPolynomial super_character(int m, int n, const DegreeBox& box) {
    const int arity = m + n - 1;
    if (box.arity() != arity) throw validation_error("degree box arity mismatch");
    SignedPolynomial even = SignedPolynomial::one(arity);
    SignedPolynomial odd = SignedPolynomial::one(arity);
    for (const auto& root : super_positive_roots(m, n)) {
        SignedPolynomial factor = SignedPolynomial::one(arity);
        factor.add_term(root.exponents(m, n),
                        root.parity == RootParity::even ? Int(-1) : Int(1));
        if (root.parity == RootParity::even)
            even = mul(even, factor, box);
        else
            odd = mul(odd, factor, box);
    }
    return mul(odd, series_reciprocal(even, box), box);
}

// D_P f(M) = sum over monomials t^beta of P of sgn(beta) f(M - beta).
// For a series-type inverse the box must cover M componentwise; terms the
// box discards would only probe f at arguments outside its support.
inline Int apply_shift(const CharacterInverse& inv,
                       const std::function<Int(const MagnonVector&)>& f,
                       const MagnonVector& m) {
    if (static_cast<int>(m.size()) != inv.arity())
        throw validation_error("magnon vector arity mismatch in shift");
    if (inv.is_series() && !inv.box()->covers(m))
        throw validation_error("truncation box does not cover the magnon vector");
    Int total(0);
    MagnonVector probe(m.size());
    for (const auto& [beta, weight] : inv.poly().terms()) {
        for (std::size_t i = 0; i < probe.size(); ++i) probe[i] = m[i] - beta[i];
        total += weight * f(probe);
    }
    return total;
}

// Renders the stencil as the difference formula it encodes, e.g.
//   c(M1,M2) - c(M1-1,M2) - c(M1,M2-1) + c(M1-2,M2-1) + c(M1-1,M2-2) - c(M1-2,M2-2)
// A single variable is written plain "M".
inline std::string format_stencil(const CharacterInverse& inv, const std::string& fname = "c") {
    std::string out;
    const int arity = inv.arity();
    for (const auto& [beta, weight] : inv.poly().terms()) {
        const bool negative = weight < 0;
        const Int mag = abs(weight);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) out += to_decimal(mag) + "*";
        out += fname + "(";
        for (int i = 0; i < arity; ++i) {
            if (i > 0) out += ",";
            out += arity == 1 ? "M" : "M" + std::to_string(i + 1);
            if (beta[static_cast<std::size_t>(i)] != 0)
                out += "-" + std::to_string(beta[static_cast<std::size_t>(i)]);
        }
        out += ")";
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace bethecount
