#include "wordnum/constructions.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wordnum {

namespace {

void append_base_g(long value, int g, std::vector<int>& out) {
  int buf[64];
  int len = 0;
  while (value > 0) {
    buf[len++] = static_cast<int>(value % g);
    value /= g;
  }
  for (int i = len; i-- > 0;) out.push_back(buf[i]);
}

std::vector<int> champernowne_digits(int g, long n) {
  std::vector<int> digits;
  digits.reserve(n + 64);
  for (long k = 1; static_cast<long>(digits.size()) < n; ++k)
    append_base_g(k, g, digits);
  digits.resize(n);
  return digits;
}

class StonehamSource final : public RealSource {
 public:
  StonehamSource(long a, long g) : a_(a), g_(g) {
    if (a < 2 || g < 2) throw std::invalid_argument("stoneham needs a, g >= 2");
    if (std::gcd(a, g) != 1)
      throw std::invalid_argument("stoneham needs coprime a and g");
  }
  std::string describe() const override {
    return "stoneham:" + std::to_string(a_) + "," + std::to_string(g_);
  }

 private:
  Enclosure do_enclose(long bits) override {
    // Terms shrink past one ulp once a^M log2(g) exceeds bits + 4; the tail
    // is below twice the next term.
    double lg = std::log2(static_cast<double>(g_));
    mpq_class partial = 0;
    mpz_class apow = 1;
    for (long m = 1;; ++m) {
      apow *= a_;
      if (!apow.fits_ulong_p())
        throw precision_limit_error("stoneham exponent exceeds machine range");
      unsigned long e = apow.get_ui();
      partial += mpq_class(1, pow_mpz(a_, static_cast<unsigned long>(m)) *
                                  pow_mpz(g_, e));
      if (static_cast<double>(e) * lg >= static_cast<double>(bits + 4)) break;
    }
    Enclosure enc;
    enc.bits = bits;
    enc.lo = floor_scaled(partial, bits);
    enc.hi = ceil_scaled(partial, bits) + 1;
    return enc;
  }
  long a_, g_;
};

// Segmented sieve streaming primes in increasing order.
class PrimeStream {
 public:
  long next() {
    while (index_ >= primes_.size()) extend();
    return primes_[index_++];
  }

 private:
  void extend() {
    long lo = limit_;
    long hi = limit_ * 2;
    std::vector<bool> composite(hi - lo, false);
    for (long p = 2; p * p < hi; ++p) {
      if (!is_prime_small(p)) continue;
      long start = std::max(p * p, (lo + p - 1) / p * p);
      for (long q = start; q < hi; q += p) composite[q - lo] = true;
    }
    for (long q = std::max(lo, 2L); q < hi; ++q)
      if (!composite[q - lo]) primes_.push_back(q);
    limit_ = hi;
  }
  bool is_prime_small(long p) {
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return p >= 2;
  }
  std::vector<long> primes_;
  std::size_t index_ = 0;
  long limit_ = 1;
};

std::vector<int> copeland_erdos_digits(int g, long n) {
  std::vector<int> digits;
  digits.reserve(n + 64);
  PrimeStream primes;
  while (static_cast<long>(digits.size()) < n)
    append_base_g(primes.next(), g, digits);
  digits.resize(n);
  return digits;
}

}  // namespace

SourcePtr champernowne(int g) {
  if (g < 2) throw std::invalid_argument("base must be >= 2");
  return digit_generator_source(g, "champernowne:" + std::to_string(g),
                                [g](long n) { return champernowne_digits(g, n); });
}

long champernowne_position(long k) {
  long c = k;
  for (long j = 1; j <= k; ++j) {
    long lg = 0;
    while ((1L << (lg + 1)) <= j) ++lg;
    c += lg;
  }
  return c;
}

bool champernowne_closed_formula_check(long K) {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  long cK = champernowne_position(K);
  mpz_class sum = 0;
  for (long k = 1; k <= K; ++k)
    sum += mpz_class(k) << static_cast<unsigned long>(cK - champernowne_position(k));
  auto stream = champernowne(2)->digit_vector(2, cK);
  for (long i = cK; i-- > 0;) {
    int bit = mpz_tstbit(sum.get_mpz_t(), static_cast<mp_bitcnt_t>(cK - 1 - i));
    if (bit != stream[i]) return false;
  }
  return true;
}

SourcePtr korobov_stoneham(long a, long g) {
  return std::make_shared<StonehamSource>(a, g);
}

SourcePtr copeland_erdos(int g) {
  if (g < 2) throw std::invalid_argument("base must be >= 2");
  return digit_generator_source(g, "copeland-erdos:" + std::to_string(g),
                                [g](long n) { return copeland_erdos_digits(g, n); });
}

std::vector<long> prime_prefix(long count) {
  PrimeStream primes;
  std::vector<long> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) out.push_back(primes.next());
  return out;
}

long copeland_erdos_digit_count(int g, long k) {
  PrimeStream primes;
  long total = 0;
  for (long i = 0; i < k; ++i) {
    long p = primes.next();
    while (p > 0) {
      ++total;
      p /= g;
    }
  }
  return total;
}

}  // namespace wordnum
