#ifndef NOVIKOV_NUMBERS_HPP
#define NOVIKOV_NUMBERS_HPP

#include <gmpxx.h>

#include <string>

namespace novikov {

// Exact scalars used throughout: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Int pow10(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace novikov

#endif // NOVIKOV_NUMBERS_HPP
