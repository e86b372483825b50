#ifndef TDI_RATIONAL_HPP
#define TDI_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tdi {

// Exact coefficient arithmetic is GMP's; these aliases keep the rest of the
// code free of gmpxx spellings. A Rational is always canonical: lowest terms,
// positive denominator (gmpxx maintains this through arithmetic as long as
// inputs are canonicalized, which make_rational and parse_rational guarantee).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer numerator, Integer denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational value(std::move(numerator), std::move(denominator));
    value.canonicalize();
    return value;
}

inline Rational rational_abs(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

/// n-th power with the convention 0^0 = 1.
inline Rational rational_pow(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

inline Integer integer_factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

inline Integer integer_binomial(unsigned long n, unsigned long k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

inline std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

} // namespace tdi

#endif
