#ifndef FARHI_NUMBERS_HPP
#define FARHI_NUMBERS_HPP

#include <gmpxx.h>
#include <string>

namespace farhi {

// Exact arbitrary-precision integers and rationals, GMP-backed.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_abs(const Int& a) { return a >= 0 ? a : Int(-a); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool fits_ulong(const Int& a) { return a.fits_ulong_p(); }

inline std::string to_decimal(const Int& a) { return a.get_str(); }

}  // namespace farhi

#endif
