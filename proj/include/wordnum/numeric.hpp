#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wordnum {

// Raised when a certified computation hits its configured precision ceiling.
// The CLI maps this to exit code 3.
class precision_limit_error : public std::runtime_error {
 public:
  explicit precision_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Interval x in [lo, hi] / 2^bits with lo <= hi. Producers keep hi - lo small
// (a handful of ulps); consumers must tolerate any nonnegative width.
struct Enclosure {
  mpz_class lo;
  mpz_class hi;
  long bits = 0;

  mpq_class lower() const;
  mpq_class upper() const;
  mpz_class width() const { return hi - lo; }

  // Re-expresses the interval with the given denominator exponent, rounding
  // outward. Widens by at most one ulp per endpoint.
  Enclosure rescaled(long new_bits) const;
};

mpz_class isqrt(const mpz_class& n);

mpz_class pow_mpz(const mpz_class& base, unsigned long e);

// floor(a / b) for b > 0.
mpz_class fdiv(const mpz_class& a, const mpz_class& b);
// ceil(a / b) for b > 0.
mpz_class cdiv(const mpz_class& a, const mpz_class& b);

// floor(x * 2^bits) and ceil(x * 2^bits).
mpz_class floor_scaled(const mpq_class& x, long bits);
mpz_class ceil_scaled(const mpq_class& x, long bits);

// log2 of a positive integer, accurate to double precision even for huge
// operands (mantissa + exponent decomposition, no overflow).
double log2_mpz(const mpz_class& n);

// Decimal string of a rational for reporting.
std::string to_string(const mpq_class& x, int decimals);

}  // namespace wordnum
