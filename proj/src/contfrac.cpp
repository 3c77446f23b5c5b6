#include "wordnum/contfrac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wordnum {

namespace {

mpz_class floor_q(const mpq_class& x) { return fdiv(x.get_num(), x.get_den()); }

}  // namespace

ContinuedFraction cf_expand(SourcePtr x, long n_terms) {
  if (n_terms < 0) throw std::invalid_argument("negative term count");
  if (x->describe().rfind("rational:", 0) == 0)
    throw std::invalid_argument("expansion needs an irrational source");
  long bits = std::max(256L, n_terms * 24);
  while (true) {
    if (bits > x->max_bits())
      throw precision_limit_error(
          "partial quotients not certifiable at the precision ceiling "
          "(is the input rational?)");
    Enclosure e = x->enclose(bits);
    mpq_class lo = e.lower();
    mpq_class hi = e.upper();
    ContinuedFraction cf;
    cf.provenance = "source:" + x->describe();
    bool ok = true;
    for (long i = 0; i <= n_terms; ++i) {
      mpz_class flo = floor_q(lo);
      mpz_class fhi = floor_q(hi);
      if (flo != fhi) {
        ok = false;
        break;
      }
      if (i == 0) {
        cf.a0 = flo;
      } else {
        if (flo < 1) {
          ok = false;
          break;
        }
        cf.a.push_back(flo);
      }
      if (i == n_terms) break;
      mpq_class frac_lo = lo - mpq_class(flo);
      mpq_class frac_hi = hi - mpq_class(flo);
      if (frac_lo <= 0) {
        ok = false;
        break;
      }
      lo = 1 / frac_hi;
      hi = 1 / frac_lo;
    }
    if (ok) return cf;
    bits *= 2;
  }
}

ContinuedFraction cf_from_word(WordStream& w, long a_value, long b_value,
                               long n_terms) {
  if (a_value < 1 || b_value < 1)
    throw std::invalid_argument("quotient values must be positive");
  if (a_value == b_value)
    throw std::invalid_argument("quotient values must differ");
  ContinuedFraction cf;
  cf.a0 = 0;
  cf.provenance =
      "word:" + std::to_string(a_value) + "," + std::to_string(b_value);
  for (long i = 0; i < n_terms; ++i) {
    Symbol s = w.at(i);
    if (s != 0 && s != 1)
      throw std::invalid_argument("word must be over a two-letter alphabet");
    cf.a.push_back(s == 0 ? a_value : b_value);
  }
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, long n) {
  if (n < 0) throw std::invalid_argument("negative convergent index");
  if (n > static_cast<long>(cf.a.size()))
    throw std::invalid_argument("not enough partial quotients");
  std::vector<Convergent> out;
  out.reserve(n + 1);
  mpz_class p_prev = 1, q_prev = 0;
  mpz_class p = cf.a0, q = 1;
  out.push_back({p, q, 0});
  for (long i = 1; i <= n; ++i) {
    mpz_class pn = cf.a[i - 1] * p + p_prev;
    mpz_class qn = cf.a[i - 1] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
    out.push_back({p, q, i});
  }
  return out;
}

KappaReport irrationality_exponent_estimate(const ContinuedFraction& cf, long n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (n + 1 > static_cast<long>(cf.a.size()))
    throw std::invalid_argument("not enough partial quotients for q_{n+1}");
  auto conv = convergents(cf, n + 1);
  constexpr double kLn2 = 0.6931471805599453;
  KappaReport rep;
  for (long i = 2; i <= n; ++i) {
    double lq = log2_mpz(conv[i].q) * kLn2;
    double lq_next = log2_mpz(conv[i + 1].q) * kLn2;
    rep.kappa.push_back(1.0 + lq_next / lq);
  }
  rep.max_kappa = *std::max_element(rep.kappa.begin(), rep.kappa.end());

  long w_lo = std::max(2L, n / 4);
  double sx = 0, sy = 0, sxx = 0, sxy = 0, count = 0;
  for (long i = w_lo; i <= n; ++i) {
    double u = 1.0 / (log2_mpz(conv[i].q) * kLn2);
    double v = rep.kappa[i - 2];
    sx += u;
    sy += v;
    sxx += u * u;
    sxy += u * v;
    count += 1;
  }
  double denom = count * sxx - sx * sx;
  if (denom == 0) {
    rep.tail_trend = sy / count;
  } else {
    double slope = (count * sxy - sx * sy) / denom;
    rep.tail_trend = (sy - slope * sx) / count;
  }
  return rep;
}

RoyReport roy_check(long a_value, long b_value, const std::vector<long>& x_grid,
                    long precision_bits) {
  if (x_grid.empty()) throw std::invalid_argument("empty grid");
  long x_max = *std::max_element(x_grid.begin(), x_grid.end());
  if (x_max < 1) throw std::invalid_argument("grid bounds must be >= 1");
  long need = 2 * static_cast<long>(std::ceil(std::log2(static_cast<double>(x_max) + 1))) + 64;
  long bits = std::max(need, precision_bits);

  Morphism fib_morphism = named_morphism("fib");
  auto fib_word = fixed_point(fib_morphism, fib_morphism.source().index_of("a"));
  long terms = 32;
  mpq_class xi;
  while (true) {
    auto cf = cf_from_word(*fib_word, a_value, b_value, terms);
    auto conv = convergents(cf, terms);
    const auto& last = conv[terms];
    const auto& prev = conv[terms - 1];
    if (log2_mpz(last.q) + log2_mpz(prev.q) >= static_cast<double>(bits + 16)) {
      xi = mpq_class(last.p, last.q);
      xi.canonicalize();
      break;
    }
    terms *= 2;
  }
  mpq_class xi2 = xi * xi;

  constexpr long kFrac = 128;
  mpz_class full = mpz_class(1) << kFrac;
  auto frac_fixed = [&](const mpq_class& v) -> mpz_class {
    mpz_class num = v.get_num() % v.get_den();
    return (num << kFrac) / v.get_den();
  };
  mpz_class f1 = frac_fixed(xi);
  mpz_class f2 = frac_fixed(xi2);

  RoyReport rep;
  rep.a_value = a_value;
  rep.b_value = b_value;
  rep.exponent = 0.6180339887498949;  // 1/Phi = (sqrt 5 - 1)/2
  for (long x_bound : x_grid) {
    mpz_class acc1 = 0, acc2 = 0;
    mpz_class best = full;
    long best_x0 = 1;
    mpz_class best_d1 = 0, best_d2 = 0;
    for (long x0 = 1; x0 <= x_bound; ++x0) {
      acc1 += f1;
      if (acc1 >= full) acc1 -= full;
      acc2 += f2;
      if (acc2 >= full) acc2 -= full;
      mpz_class d1 = std::min(acc1, mpz_class(full - acc1));
      mpz_class d2 = std::min(acc2, mpz_class(full - acc2));
      mpz_class worst = std::max(d1, d2);
      if (worst < best) {
        best = worst;
        best_x0 = x0;
        best_d1 = d1;
        best_d2 = d2;
      }
    }
    RoyRow row;
    row.x_bound = x_bound;
    row.x0 = best_x0;
    auto nearest = [&](const mpq_class& v) {
      return fdiv(2 * best_x0 * v.get_num() + v.get_den(), 2 * v.get_den());
    };
    row.x1 = nearest(xi);
    row.x2 = nearest(xi2);
    double scale = std::pow(2.0, -static_cast<double>(kFrac));
    row.err1 = mpz_get_d(best_d1.get_mpz_t()) * scale;
    row.err2 = mpz_get_d(best_d2.get_mpz_t()) * scale;
    row.s = std::max(row.err1, row.err2) *
            std::pow(static_cast<double>(x_bound), rep.exponent);
    rep.c_emp = std::max(rep.c_emp, row.s);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace wordnum
