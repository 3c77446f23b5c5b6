#include "wordnum/reals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wordnum {

namespace {

mpz_class pow2(long bits) {
  mpz_class r = 1;
  r <<= static_cast<unsigned long>(bits);
  return r;
}

}  // namespace

Enclosure RealSource::enclose(long bits) {
  if (bits < 1) bits = 1;
  if (cache_ && cache_->bits >= bits) return cache_->rescaled(bits);
  Enclosure e = do_enclose(bits);
  if (e.lo > e.hi) throw std::logic_error("inverted enclosure");
  cache_ = e;
  return e;
}

std::optional<std::vector<int>> RealSource::exact_digits(int, long) {
  return std::nullopt;
}

mpz_class RealSource::integer_part() {
  long guard = 32;
  while (true) {
    if (guard > max_bits_)
      throw precision_limit_error("integer part of " + describe() +
                                  " not separated at precision ceiling");
    Enclosure e = enclose(guard);
    mpz_class lo = fdiv(e.lo, pow2(e.bits));
    mpz_class hi = fdiv(e.hi, pow2(e.bits));
    if (lo == hi) return lo;
    guard *= 2;
  }
}

std::vector<int> RealSource::digit_vector(int g, long n) {
  if (g < 2) throw std::invalid_argument("digit base must be >= 2");
  if (n < 0) throw std::invalid_argument("digit count must be >= 0");
  auto& cache = digit_cache_[g];
  if (static_cast<long>(cache.size()) < n) {
    if (auto exact = exact_digits(g, n)) {
      cache = std::move(*exact);
    } else {
      double lg = std::log2(static_cast<double>(g));
      long guard = 64;
      while (true) {
        long bits = static_cast<long>(std::ceil(static_cast<double>(n) * lg)) + guard;
        if (bits > max_bits_)
          throw precision_limit_error("digits of " + describe() +
                                      " hit the precision ceiling");
        Enclosure e = enclose(bits);
        mpz_class gn = pow_mpz(g, static_cast<unsigned long>(n));
        mpz_class vlo = fdiv(e.lo * gn, pow2(bits));
        mpz_class vhi = fdiv(e.hi * gn, pow2(bits));
        if (vlo == vhi) {
          if (vlo < 0)
            throw std::invalid_argument("digits of a negative value");
          mpz_class frac = vlo % gn;
          std::vector<int> digits(n, 0);
          for (long i = n; i-- > 0;) {
            mpz_class r = frac % g;
            digits[i] = static_cast<int>(r.get_ui());
            frac /= g;
          }
          cache = std::move(digits);
          break;
        }
        guard *= 2;
      }
    }
  }
  return std::vector<int>(cache.begin(), cache.begin() + n);
}

std::string RealSource::digit_string(int g, long n) {
  auto digits = digit_vector(g, n);
  std::string out;
  if (g <= 36) {
    static const char* kDigits = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    for (int d : digits) out += kDigits[d];
  } else {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(digits[i]);
    }
  }
  return out;
}

namespace {

class SqrtSource final : public RealSource {
 public:
  explicit SqrtSource(unsigned long d) : d_(d) {
    mpz_class root = isqrt(mpz_class(d));
    if (d == 0 || root * root == d)
      throw std::invalid_argument("sqrt source requires a nonsquare d >= 2");
  }
  std::string describe() const override { return "sqrt:" + std::to_string(d_); }

 private:
  Enclosure do_enclose(long bits) override {
    // s = isqrt(d 4^bits) gives s <= sqrt(d) 2^bits < s + 1 exactly.
    Enclosure e;
    e.bits = bits;
    e.lo = isqrt(mpz_class(d_) << static_cast<unsigned long>(2 * bits));
    e.hi = e.lo + 1;
    return e;
  }
  unsigned long d_;
};

class RationalSource final : public RealSource {
 public:
  RationalSource(const mpz_class& p, const mpz_class& q) : v_(p, q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
    if (v_ < 0) throw std::invalid_argument("negative rational source");
  }
  std::string describe() const override {
    return "rational:" + v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  const mpq_class& value() const { return v_; }

 private:
  Enclosure do_enclose(long bits) override {
    Enclosure e;
    e.bits = bits;
    e.lo = floor_scaled(v_, bits);
    e.hi = e.lo + 1;
    return e;
  }
  std::optional<std::vector<int>> exact_digits(int g, long n) override {
    std::vector<int> digits;
    digits.reserve(n);
    mpz_class r = v_.get_num() % v_.get_den();
    for (long i = 0; i < n; ++i) {
      r *= g;
      digits.push_back(static_cast<int>(mpz_class(r / v_.get_den()).get_ui()));
      r %= v_.get_den();
    }
    return digits;
  }
  mpq_class v_;
};

// Base for sources defined by an exact digit stream in one base (value in
// [0,1)). Enclosures in any scale derive from a long enough digit prefix.
class ExactDigitSource : public RealSource {
 protected:
  explicit ExactDigitSource(int native_base) : native_(native_base) {}
  virtual std::vector<int> generate_digits(long n) = 0;

  std::optional<std::vector<int>> exact_digits(int g, long n) override {
    if (g != native_) return std::nullopt;
    return generate_digits(n);
  }

  Enclosure do_enclose(long bits) override {
    double lg = std::log2(static_cast<double>(native_));
    long m = static_cast<long>(std::ceil(static_cast<double>(bits + 3) / lg)) + 1;
    auto digits = digit_vector(native_, m);
    mpz_class num = 0;
    for (int d : digits) num = num * native_ + d;
    mpz_class den = pow_mpz(native_, static_cast<unsigned long>(m));
    Enclosure e;
    e.bits = bits;
    e.lo = fdiv(num << static_cast<unsigned long>(bits), den);
    e.hi = fdiv((num + 1) << static_cast<unsigned long>(bits), den) + 1;
    return e;
  }

 private:
  int native_;
};

class LacunarySource final : public ExactDigitSource {
 public:
  LacunarySource(int base, std::string name, std::function<mpz_class(int)> exponent)
      : ExactDigitSource(base),
        name_(std::move(name)),
        exponent_(std::move(exponent)) {}
  std::string describe() const override { return "lacunary:" + name_; }

 private:
  std::vector<int> generate_digits(long n) override {
    std::vector<int> digits(n, 0);
    mpz_class last = 0;
    for (int i = 0;; ++i) {
      mpz_class u = exponent_(i);
      if (i > 0 && u <= last)
        throw std::logic_error("lacunary exponents must strictly increase");
      last = u;
      if (u > n) break;
      digits[u.get_ui() - 1] = 1;
    }
    return digits;
  }
  std::string name_;
  std::function<mpz_class(int)> exponent_;
};

class EtaSource final : public ExactDigitSource {
 public:
  EtaSource() : ExactDigitSource(3) {}
  std::string describe() const override { return "eta"; }

 private:
  std::vector<int> generate_digits(long n) override {
    // 1 - sum 3^-T_k has digit 2 everywhere except 1 at triangular positions
    // (no borrows: the subtrahend digits are 0/1 against 0.222...).
    std::vector<int> digits(n, 2);
    for (long k = 1; k * (k + 1) / 2 <= n; ++k) digits[k * (k + 1) / 2 - 1] = 1;
    return digits;
  }
};

class GeneratorSource final : public ExactDigitSource {
 public:
  GeneratorSource(int base, std::string name,
                  std::function<std::vector<int>(long)> generate)
      : ExactDigitSource(base), name_(std::move(name)), generate_(std::move(generate)) {}
  std::string describe() const override { return name_; }

 private:
  std::vector<int> generate_digits(long n) override { return generate_(n); }
  std::string name_;
  std::function<std::vector<int>(long)> generate_;
};

class ScaledSource final : public RealSource {
 public:
  ScaledSource(const mpz_class& m, SourcePtr inner)
      : m_(m), inner_(std::move(inner)) {
    if (m_ <= 0) throw std::invalid_argument("scale must be positive");
  }
  std::string describe() const override {
    return "mul:" + m_.get_str() + ":" + inner_->describe();
  }

 private:
  Enclosure do_enclose(long bits) override {
    long k = static_cast<long>(mpz_sizeinbase(m_.get_mpz_t(), 2));
    Enclosure in = inner_->enclose(bits + k + 3);
    Enclosure e;
    e.bits = in.bits;
    e.lo = in.lo * m_;
    e.hi = in.hi * m_;
    return e.rescaled(bits);
  }
  mpz_class m_;
  SourcePtr inner_;
};

class SumSource final : public RealSource {
 public:
  SumSource(SourcePtr a, SourcePtr b, bool subtract)
      : a_(std::move(a)), b_(std::move(b)), subtract_(subtract) {}
  std::string describe() const override {
    return (subtract_ ? "diff(" : "sum(") + a_->describe() + "," +
           b_->describe() + ")";
  }

 private:
  Enclosure do_enclose(long bits) override {
    Enclosure ea = a_->enclose(bits + 4);
    Enclosure eb = b_->enclose(bits + 4);
    Enclosure e;
    e.bits = bits + 4;
    if (subtract_) {
      e.lo = ea.lo - eb.hi;
      e.hi = ea.hi - eb.lo;
    } else {
      e.lo = ea.lo + eb.lo;
      e.hi = ea.hi + eb.hi;
    }
    return e.rescaled(bits);
  }
  SourcePtr a_, b_;
  bool subtract_;
};

// Exponent k with x <= 2^k, from a coarse enclosure.
long upper_exponent(RealSource& x) {
  Enclosure e = x.enclose(16);
  if (e.hi <= 0) return -16;
  return static_cast<long>(mpz_sizeinbase(e.hi.get_mpz_t(), 2)) - 16;
}

// Exponent m with x >= 2^-m (x must be positive); refines until separated
// from zero.
long lower_exponent_neg(RealSource& x) {
  long bits = 16;
  while (true) {
    Enclosure e = x.enclose(bits);
    if (e.lo > 0)
      return bits - (static_cast<long>(mpz_sizeinbase(e.lo.get_mpz_t(), 2)) - 1);
    if (bits > x.max_bits())
      throw precision_limit_error(x.describe() + " not separated from zero");
    bits *= 2;
  }
}

class ProductSource final : public RealSource {
 public:
  // Operands must be nonnegative.
  ProductSource(SourcePtr a, SourcePtr b) : a_(std::move(a)), b_(std::move(b)) {}
  std::string describe() const override {
    return "prod(" + a_->describe() + "," + b_->describe() + ")";
  }

 private:
  Enclosure do_enclose(long bits) override {
    long ka = std::max(0L, upper_exponent(*a_));
    long kb = std::max(0L, upper_exponent(*b_));
    Enclosure ea = a_->enclose(bits + kb + 4);
    Enclosure eb = b_->enclose(bits + ka + 4);
    mpz_class alo = std::max(ea.lo, mpz_class(0));
    mpz_class blo = std::max(eb.lo, mpz_class(0));
    Enclosure e;
    e.bits = ea.bits + eb.bits;
    e.lo = alo * blo;
    e.hi = ea.hi * eb.hi;
    return e.rescaled(bits);
  }
  SourcePtr a_, b_;
};

class ReciprocalSource final : public RealSource {
 public:
  explicit ReciprocalSource(SourcePtr a) : a_(std::move(a)) {}
  std::string describe() const override { return "recip(" + a_->describe() + ")"; }

 private:
  Enclosure do_enclose(long bits) override {
    long m = std::max(0L, lower_exponent_neg(*a_));
    long inner_bits = bits + 2 * m + 6;
    Enclosure ea = a_->enclose(inner_bits);
    while (ea.lo <= 0) {
      inner_bits *= 2;
      if (inner_bits > a_->max_bits())
        throw precision_limit_error("reciprocal of value not separated from zero");
      ea = a_->enclose(inner_bits);
    }
    Enclosure e;
    e.bits = bits;
    mpz_class num = mpz_class(1) << static_cast<unsigned long>(ea.bits + bits);
    e.lo = fdiv(num, ea.hi);
    e.hi = cdiv(num, ea.lo);
    return e;
  }
  SourcePtr a_;
};

// Alternating arctangent series of 1/x in fixed point; result brackets
// atan(1/x) 2^bits within err ulps.
void atan_inv_scaled(unsigned long x, long bits, mpz_class& value, long& err) {
  mpz_class xx(x);
  mpz_class denom_pow = xx;
  mpz_class sum = 0;
  long terms = 0;
  mpz_class scale = mpz_class(1) << static_cast<unsigned long>(bits);
  for (unsigned long k = 0;; ++k) {
    mpz_class term = fdiv(scale, denom_pow * (2 * k + 1));
    if (term == 0) break;
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    denom_pow *= xx * xx;
    ++terms;
  }
  value = sum;
  err = terms + 2;  // one ulp per floored term, plus the omitted tail
}

class PiSource final : public RealSource {
 public:
  std::string describe() const override { return "pi"; }

 private:
  Enclosure do_enclose(long bits) override {
    long work = bits + 64;
    mpz_class a5, a239;
    long e5 = 0, e239 = 0;
    atan_inv_scaled(5, work, a5, e5);
    atan_inv_scaled(239, work, a239, e239);
    Enclosure e;
    e.bits = work;
    e.lo = 16 * (a5 - e5) - 4 * (a239 + e239);
    e.hi = 16 * (a5 + e5) - 4 * (a239 - e239);
    return e.rescaled(bits);
  }
};

class Zeta3Source final : public RealSource {
 public:
  std::string describe() const override { return "zeta3"; }

 private:
  Enclosure do_enclose(long bits) override {
    // zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 binom(2n,n)); terms decay
    // by a factor about 4, so the alternating tail is below the first
    // omitted term.
    long work = bits + 64;
    mpz_class scale5 = mpz_class(5) << static_cast<unsigned long>(work - 1);
    mpz_class sum = 0;
    long terms = 0;
    for (unsigned long n = 1;; ++n) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
      mpz_class term = fdiv(scale5, mpz_class(n) * n * n * binom);
      if (term == 0) break;
      if (n % 2 == 1)
        sum += term;
      else
        sum -= term;
      ++terms;
    }
    Enclosure e;
    e.bits = work;
    e.lo = sum - (terms + 2);
    e.hi = sum + (terms + 2);
    return e.rescaled(bits);
  }
};

}  // namespace

SourcePtr sqrt_source(unsigned long d) { return std::make_shared<SqrtSource>(d); }

SourcePtr rational_source(const mpz_class& p, const mpz_class& q) {
  return std::make_shared<RationalSource>(p, q);
}

SourcePtr lacunary_source(int base, std::string name,
                          std::function<mpz_class(int)> exponent) {
  return std::make_shared<LacunarySource>(base, std::move(name),
                                          std::move(exponent));
}

SourcePtr lacunary_builtin(const std::string& family) {
  if (family == "2^n")
    return lacunary_source(2, family, [](int i) {
      return pow_mpz(2, static_cast<unsigned long>(i));
    });
  if (family == "n!")
    return lacunary_source(2, family, [](int i) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i + 1));
      return f;
    });
  if (family == "fib")
    return lacunary_source(2, family, [](int i) {
      mpz_class f;
      mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(i + 2));
      return f;
    });
  throw std::invalid_argument("unknown lacunary family: " + family);
}

SourcePtr eta_source() { return std::make_shared<EtaSource>(); }

SourcePtr digit_generator_source(int base, std::string name,
                                 std::function<std::vector<int>(long)> generate) {
  return std::make_shared<GeneratorSource>(base, std::move(name),
                                           std::move(generate));
}

SourcePtr scaled_source(const mpz_class& m, SourcePtr inner) {
  return std::make_shared<ScaledSource>(m, std::move(inner));
}

SourcePtr sum_source(SourcePtr a, SourcePtr b) {
  return std::make_shared<SumSource>(std::move(a), std::move(b), false);
}

SourcePtr difference_source(SourcePtr a, SourcePtr b) {
  return std::make_shared<SumSource>(std::move(a), std::move(b), true);
}

SourcePtr product_source(SourcePtr a, SourcePtr b) {
  return std::make_shared<ProductSource>(std::move(a), std::move(b));
}

SourcePtr reciprocal_source(SourcePtr a) {
  return std::make_shared<ReciprocalSource>(std::move(a));
}

SourcePtr pi_source() { return std::make_shared<PiSource>(); }

SourcePtr zeta3_source() { return std::make_shared<Zeta3Source>(); }

ExpansionReport rational_expansion(const mpz_class& p, const mpz_class& q, int g) {
  if (q < 1) throw std::invalid_argument("denominator must be >= 1");
  if (p < 0) throw std::invalid_argument("negative rational");
  if (g < 2) throw std::invalid_argument("base must be >= 2");
  ExpansionReport rep;
  rep.base = g;
  rep.integer = p / q;
  mpz_class r = p % q;
  std::map<mpz_class, long> seen;
  std::vector<int> digits;
  constexpr long kMaxSteps = 2'000'000;
  while (r != 0) {
    auto [it, fresh] = seen.emplace(r, static_cast<long>(digits.size()));
    if (!fresh) {
      long start = it->second;
      rep.preperiod.assign(digits.begin(), digits.begin() + start);
      rep.period.assign(digits.begin() + start, digits.end());
      return rep;
    }
    if (static_cast<long>(digits.size()) > kMaxSteps)
      throw std::runtime_error("rational expansion period too long at desk scale");
    r *= g;
    digits.push_back(static_cast<int>(mpz_class(r / q).get_ui()));
    r %= q;
  }
  rep.preperiod = digits;  // terminating
  return rep;
}

long ones_count(RealSource& x, long n) {
  if (n == 0) return 0;
  auto digits = x.digit_vector(2, n);
  return static_cast<long>(std::count(digits.begin(), digits.end(), 1));
}

BInequalityReport check_b_inequalities(SourcePtr x, SourcePtr y, long n_max) {
  BInequalityReport rep;
  rep.n_max = n_max;
  auto sum = sum_source(x, y);
  auto prod = product_source(x, y);
  auto recip = reciprocal_source(x);

  auto prefix_ones = [n_max](RealSource& s) {
    auto digits = s.digit_vector(2, n_max);
    std::vector<long> acc(n_max + 1, 0);
    for (long i = 0; i < n_max; ++i) acc[i + 1] = acc[i] + digits[i];
    return acc;
  };
  auto bx = prefix_ones(*x);
  auto by = prefix_ones(*y);
  auto bsum = prefix_ones(*sum);
  auto bprod = prefix_ones(*prod);
  auto brecip = prefix_ones(*recip);

  rep.product_log_arg = mpz_class(sum->integer_part() + 1).get_si();
  auto x_plus_recip = sum_source(x, recip);
  rep.reciprocal_shift =
      static_cast<long>(mpz_sizeinbase(
          mpz_class(x_plus_recip->integer_part() + 1).get_mpz_t(), 2)) -
      1;

  for (long n = 1; n <= n_max; ++n) {
    bool viol[3];
    viol[0] = bsum[n] > bx[n] + by[n] + rep.sum_constant;
    long c = bprod[n] - bx[n] * by[n];
    viol[1] = c > 0 && (c >= 62 || (1LL << c) > rep.product_log_arg);
    viol[2] = bx[n] * brecip[n] < n - 1 - rep.reciprocal_shift;
    for (int i = 0; i < 3; ++i) {
      if (viol[i]) {
        ++rep.violations[i];
        rep.threshold[i] = n + 1;
      }
    }
  }
  return rep;
}

GrowthProbe b_growth_probe(RealSource& x, long n_max) {
  auto digits = x.digit_vector(2, n_max);
  GrowthProbe probe;
  long count = 0;
  for (long n = 1; n <= n_max; ++n) {
    count += digits[n - 1];
    if (count == 0) probe.n0 = n + 1;
  }
  count = 0;
  probe.c = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= n_max; ++n) {
    count += digits[n - 1];
    if (n >= probe.n0)
      probe.c = std::min(probe.c,
                         static_cast<double>(count) / std::sqrt(static_cast<double>(n)));
  }
  if (!std::isfinite(probe.c)) probe.c = 0.0;
  return probe;
}

NormalityStats normality_stats(RealSource& x, int g, int block_len, long n,
                               double threshold) {
  if (block_len < 1) throw std::invalid_argument("block length must be >= 1");
  NormalityStats st;
  st.base = g;
  st.block_len = block_len;
  st.horizon = n;
  st.threshold = threshold;
  double cells = std::pow(static_cast<double>(g), block_len);
  st.horizon_warning = static_cast<double>(n) < 30.0 * cells;

  auto digits = x.digit_vector(g, n);
  long windows = n - block_len + 1;
  if (windows <= 0) throw std::invalid_argument("horizon shorter than block");
  std::map<std::string, long> counts;
  static const char* kDigits = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  auto key_of = [&](long i) {
    std::string key;
    for (int j = 0; j < block_len; ++j) {
      int d = digits[i + j];
      if (g <= 36) {
        key += kDigits[d];
      } else {
        if (j) key += ',';
        key += std::to_string(d);
      }
    }
    return key;
  };
  for (long i = 0; i < windows; ++i) ++counts[key_of(i)];

  double expected = 1.0 / cells;
  double max_dev = counts.size() < cells ? expected : 0.0;
  for (const auto& [key, count] : counts) {
    double f = static_cast<double>(count) / static_cast<double>(windows);
    st.freq[key] = f;
    max_dev = std::max(max_dev, std::abs(f - expected));
  }
  st.max_deviation = max_dev;
  st.consistent = max_dev < threshold;
  return st;
}

LiouvilleWitness liouville_witness(unsigned long a, unsigned long N) {
  if (a < 2 || N < 1) throw std::invalid_argument("need a >= 2, N >= 1");
  LiouvilleWitness w;
  mpz_class base(a);
  unsigned long n2 = N * N;
  w.q = pow_mpz(base, n2);
  w.p = 0;
  for (unsigned long n = 0; n <= N; ++n) w.p += pow_mpz(base, n2 - n * n);

  // residual = sum_{m>=1} a^-(m(2N+m)); successive terms shrink by more than
  // a factor of 2, so the tail after the partial sum is below twice the next
  // term.
  constexpr unsigned long kTerms = 8;
  mpq_class partial = 0;
  for (unsigned long m = 1; m <= kTerms; ++m)
    partial += mpq_class(1, pow_mpz(base, m * (2 * N + m)));
  mpq_class next(1, pow_mpz(base, (kTerms + 1) * (2 * N + kTerms + 1)));
  w.residual_lo = partial;
  w.residual_hi = partial + 2 * next;

  // bound = (theta - 1) a^-2N with theta - 1 = sum_{n>=1} a^-(n^2).
  mpq_class theta1 = 0;
  for (unsigned long n = 1; n <= kTerms; ++n)
    theta1 += mpq_class(1, pow_mpz(base, n * n));
  mpq_class theta1_hi =
      theta1 + 2 * mpq_class(1, pow_mpz(base, (kTerms + 1) * (kTerms + 1)));
  mpq_class shift(1, pow_mpz(base, 2 * N));
  w.bound_lo = theta1 * shift;
  w.bound_hi = theta1_hi * shift;

  w.strict = w.residual_lo > 0 && w.residual_hi < w.bound_lo;
  return w;
}

BlockSearchResult block_search(SourcePtr x, int g, const std::vector<int>& block,
                               long horizon, long m_max) {
  if (block.empty()) throw std::invalid_argument("empty block");
  for (int d : block)
    if (d < 0 || d >= g) throw std::invalid_argument("block digit outside base");
  BlockSearchResult res;
  if (m_max <= 0) {
    mpz_class cap = 2 * pow_mpz(g, static_cast<unsigned long>(block.size()) + 1);
    if (!cap.fits_slong_p())
      throw std::invalid_argument("default multiplier bound too large; pass m_max");
    m_max = cap.get_si();
  }
  res.m_max = m_max;
  for (long m = 1; m <= m_max; ++m) {
    SourcePtr scaled = m == 1 ? x : scaled_source(m, x);
    auto digits = scaled->digit_vector(g, horizon);
    auto it = std::search(digits.begin(), digits.end(), block.begin(), block.end());
    if (it != digits.end()) {
      res.found = true;
      res.m = m;
      res.position = static_cast<long>(it - digits.begin()) + 1;
      return res;
    }
  }
  return res;
}

}  // namespace wordnum
