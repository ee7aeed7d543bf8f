#pragma once

#include "bethecount/poly.hpp"

#include <json.hpp>

namespace bethecount {

// Wire format: a term list sorted in the canonical order, with coefficients
// as decimal strings so no consumer is forced into 64-bit range.
//   [{"exponents": [2, 1], "coeff": "-1"}, ...]
inline nlohmann::ordered_json poly_to_json(const SignedPolynomial& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["exponents"] = e;
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    return terms;
}

inline SignedPolynomial poly_from_json(int arity, const nlohmann::json& terms) {
    SignedPolynomial p(arity);
    for (const auto& term : terms) {
        Exponents e = term.at("exponents").get<Exponents>();
        p.add_term(e, Int(term.at("coeff").get<std::string>()));
    }
    return p;
}

} // namespace bethecount
