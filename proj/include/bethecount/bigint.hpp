#pragma once

#include <gmpxx.h>

#include <string>

namespace bethecount {

// All counts are exact. Completeness totals grow like binom(2s+r, r)^L, which
// leaves 64-bit range already at modest chain lengths.
using Int = mpz_class;

// Exact twist angles, measured in full turns (multiples of 2*pi).
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    if (n < 0) return Int(0);
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int int_pow(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

} // namespace bethecount
