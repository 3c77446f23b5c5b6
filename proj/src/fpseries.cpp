#include "wordnum/fpseries.hpp"

#include <stdexcept>

#include "wordnum/automata.hpp"

namespace wordnum {

namespace {

long long reduce(long long v, long modulus) {
  if (modulus == 0) return v;
  long long r = v % modulus;
  return r < 0 ? r + modulus : r;
}

void check_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.modulus != b.modulus)
    throw std::invalid_argument("series ring mismatch");
}

}  // namespace

TruncatedSeries TruncatedSeries::zero(long modulus, std::size_t order) {
  return {modulus, std::vector<long long>(order, 0)};
}

TruncatedSeries TruncatedSeries::constant(long modulus, long long value,
                                          std::size_t order) {
  auto s = zero(modulus, order);
  if (order > 0) s.c[0] = reduce(value, modulus);
  return s;
}

TruncatedSeries TruncatedSeries::one_plus_x(long modulus, std::size_t order) {
  auto s = zero(modulus, order);
  if (order > 0) s.c[0] = 1;
  if (order > 1) s.c[1] = 1;
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_ring(a, b);
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r = TruncatedSeries::zero(a.modulus, n);
  for (std::size_t i = 0; i < n; ++i)
    r.c[i] = reduce(a.c[i] + b.c[i], a.modulus);
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_ring(a, b);
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r = TruncatedSeries::zero(a.modulus, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] = reduce(r.c[i + j] + a.c[i] * b.c[j], a.modulus);
    }
  }
  return r;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long k) {
  TruncatedSeries r = TruncatedSeries::constant(a.modulus, 1, a.order());
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1) r = series_mul(r, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return r;
}

TruncatedSeries ptm_series(std::size_t order) {
  if (order == 0) throw std::invalid_argument("order must be >= 1");
  auto word = predicate_word("ptm_popcount");
  const auto& bits = word->buffer(order);
  TruncatedSeries s = TruncatedSeries::zero(2, order);
  for (std::size_t i = 0; i < order; ++i) s.c[i] = bits[i];
  return s;
}

bool verify_ptm_cubic(std::size_t order) {
  if (order < 4) throw std::invalid_argument("order must be >= 4");
  auto f = ptm_series(order);
  auto u = TruncatedSeries::one_plus_x(2, order);
  auto x = TruncatedSeries::zero(2, order);
  x.c[1] = 1;
  auto lhs = series_add(
      series_add(series_mul(series_pow(u, 3), series_mul(f, f)),
                 series_mul(series_pow(u, 2), f)),
      x);
  for (long long v : lhs.c)
    if (v != 0) return false;
  return true;
}

TruncatedSeries mahler_product(std::size_t order) {
  if (order == 0) throw std::invalid_argument("order must be >= 1");
  TruncatedSeries r = TruncatedSeries::constant(0, 1, order);
  // Sparse factors: multiplying by (1 - z^e) is c[i] -= c[i-e], applied in
  // descending order so each coefficient is updated before it is read.
  for (std::size_t e = 1; e < order; e *= 2)
    for (std::size_t i = order; i-- > e;) r.c[i] -= r.c[i - e];
  return r;
}

bool verify_mahler_functional_equation(std::size_t order) {
  auto f = mahler_product(order);
  // (1 - z) f(z^2), truncated.
  std::vector<long long> rhs(order, 0);
  for (std::size_t i = 0; 2 * i < order; ++i) {
    rhs[2 * i] += f.c[i];
    if (2 * i + 1 < order) rhs[2 * i + 1] -= f.c[i];
  }
  return rhs == f.c;
}

PeriodicityReport detect_ultimately_periodic(const TruncatedSeries& s,
                                             std::size_t min_repeats) {
  std::size_t n = s.order();
  PeriodicityReport rep;
  for (std::size_t period = 1; period * (min_repeats + 0) <= n; ++period) {
    // Largest index violating s[i] == s[i + period].
    std::size_t pre = 0;
    for (std::size_t i = n - period; i-- > 0;) {
      if (s.c[i] != s.c[i + period]) {
        pre = i + 1;
        break;
      }
    }
    if (pre + min_repeats * period <= n) {
      rep.periodic = true;
      rep.preperiod = pre;
      rep.period = period;
      return rep;
    }
  }
  return rep;
}

}  // namespace wordnum
