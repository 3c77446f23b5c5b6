#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wordnum {

// Polynomial arithmetic exact modulo X^order, with coefficients in F_p
// (modulus = prime p) or in the integers (modulus = 0).
struct TruncatedSeries {
  long modulus = 0;
  std::vector<long long> c;

  std::size_t order() const { return c.size(); }
  long long coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

  static TruncatedSeries zero(long modulus, std::size_t order);
  static TruncatedSeries constant(long modulus, long long value, std::size_t order);
  // 1 + X truncated to the given order.
  static TruncatedSeries one_plus_x(long modulus, std::size_t order);
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long k);

// F(X) = sum a_n X^n over F_2 with a_n the Prouhet-Thue-Morse bit.
TruncatedSeries ptm_series(std::size_t order);

// (1+X)^3 F^2 + (1+X)^2 F + X == 0 mod X^order over F_2.
bool verify_ptm_cubic(std::size_t order);

// prod_{n>=0} (1 - z^(2^n)) over the integers, truncated; coefficient n is
// (-1)^(a_n) = 1 - 2 a_n.
TruncatedSeries mahler_product(std::size_t order);

// f(z) - (1 - z) f(z^2) == 0 mod z^order.
bool verify_mahler_functional_equation(std::size_t order);

// Smallest (preperiod, period) such that coefficients are periodic from
// preperiod through the truncation order, with at least min_repeats full
// periods of evidence. Horizon-bounded: a positive answer certifies only the
// materialized prefix.
struct PeriodicityReport {
  bool periodic = false;
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

PeriodicityReport detect_ultimately_periodic(const TruncatedSeries& s,
                                             std::size_t min_repeats = 2);

}  // namespace wordnum
