#pragma once

#include <gmpxx.h>

#include <string>

namespace walkmat {

// Arbitrary-precision integer. All exact arithmetic in the library runs on
// this type; no operation caps entry magnitude.
using Int = mpz_class;

inline Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int pow2(unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
    return r;
}

inline bool divisible(const Int& a, const Int& d) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exponent of the largest power of two dividing a; a must be nonzero.
inline unsigned long two_adic_valuation(const Int& a) {
    return mpz_scan1(a.get_mpz_t(), 0);
}

inline std::string dec(const Int& a) { return a.get_str(); }

} // namespace walkmat
