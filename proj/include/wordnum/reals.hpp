#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wordnum/numeric.hpp"

namespace wordnum {

// Certified provider of base-g digits of a nonnegative real number.
//
// Contract: enclose(bits) returns an interval containing the exact value
// whose width is at most a few ulps of 2^-bits; digits(g, n) returns the
// first n fractional digits, each provably correct (recomputation at any
// higher precision yields the same digits, and digits(g, n) is a prefix of
// digits(g, m) for n <= m). Digit queries whose certification would need
// more than max_bits() working bits raise precision_limit_error.
class RealSource {
 public:
  virtual ~RealSource() = default;

  virtual std::string describe() const = 0;

  Enclosure enclose(long bits);
  mpz_class integer_part();
  std::vector<int> digit_vector(int g, long n);
  std::string digit_string(int g, long n);

  long max_bits() const { return max_bits_; }
  void set_max_bits(long b) { max_bits_ = b; }

 protected:
  // Must return an interval of width <= 4 ulps at the requested scale.
  virtual Enclosure do_enclose(long bits) = 0;
  // Sources with an exact expansion in some base may shortcut digit queries.
  virtual std::optional<std::vector<int>> exact_digits(int g, long n);

 private:
  std::optional<Enclosure> cache_;
  std::map<int, std::vector<int>> digit_cache_;
  long max_bits_ = 1L << 24;
};

using SourcePtr = std::shared_ptr<RealSource>;

SourcePtr sqrt_source(unsigned long d);
SourcePtr rational_source(const mpz_class& p, const mpz_class& q);

// sum of g^-u(i) for i = 0, 1, ...; u strictly increasing nonnegative.
SourcePtr lacunary_source(int base, std::string name,
                          std::function<mpz_class(int)> exponent);
// Builtin exponent families over base 2: "2^n" (1,2,4,...), "n!" (1,2,6,...),
// "fib" (1,2,3,5,8,...).
SourcePtr lacunary_builtin(const std::string& family);

// 1 - sum of 3^-n(n+1)/2; base-3 digits are 2 everywhere except 1 at
// triangular positions, matching the morphic word 0121221222... at position k.
SourcePtr eta_source();

// Source defined by an exact digit generator in a fixed base; the value lies
// in [0, 1) and generate(n) returns its first n fractional digits.
SourcePtr digit_generator_source(int base, std::string name,
                                 std::function<std::vector<int>(long)> generate);

SourcePtr scaled_source(const mpz_class& m, SourcePtr inner);
SourcePtr sum_source(SourcePtr a, SourcePtr b);
SourcePtr difference_source(SourcePtr a, SourcePtr b);
SourcePtr product_source(SourcePtr a, SourcePtr b);
SourcePtr reciprocal_source(SourcePtr a);

// Independent high-precision constants (series unrelated to any BBP form).
SourcePtr pi_source();     // Machin arctangent combination
SourcePtr zeta3_source();  // accelerated alternating central-binomial series

// Exact base-g expansion of a rational number.
struct ExpansionReport {
  int base = 0;
  mpz_class integer;
  std::vector<int> preperiod;
  std::vector<int> period;  // empty means terminating
};

ExpansionReport rational_expansion(const mpz_class& p, const mpz_class& q, int g);

// B(x, n): number of 1s among the first n binary digits.
long ones_count(RealSource& x, long n);

// The three eventual inequalities on 1-bit counts, scanned over n in
// [1, n_max]. threshold[i] is the empirical onset (largest violated n, plus
// one); the additive/product constants are derived from the operands.
struct BInequalityReport {
  long n_max = 0;
  std::array<long, 3> threshold{1, 1, 1};
  std::array<long, 3> violations{0, 0, 0};
  long sum_constant = 1;        // the +1 of the sum inequality
  long product_log_arg = 0;     // floor(x + y + 1)
  long reciprocal_shift = 0;    // floor(log2(x + 1/x + 1))
};

BInequalityReport check_b_inequalities(SourcePtr x, SourcePtr y, long n_max);

// Fits the largest C with B(x, n) >= C sqrt(n) on [n0, n_max], where n0 is
// one past the last n with B(x, n) = 0.
struct GrowthProbe {
  long n0 = 1;
  double c = 0.0;
};

GrowthProbe b_growth_probe(RealSource& x, long n_max);

// Empirical length-m block frequencies in the first n digits.
struct NormalityStats {
  int base = 0;
  int block_len = 0;
  long horizon = 0;
  std::map<std::string, double> freq;  // observed blocks only
  double max_deviation = 0.0;          // over all g^m blocks
  double threshold = 0.0;
  bool consistent = false;
  bool horizon_warning = false;  // n not >> g^m
};

NormalityStats normality_stats(RealSource& x, int g, int block_len, long n,
                               double threshold = 0.01);

// Explicit irrationality witness for theta = sum a^(-n^2): q = a^(N^2),
// p = sum_{n<=N} a^(N^2 - n^2), and 0 < q theta - p < (theta - 1) a^(-2N).
struct LiouvilleWitness {
  mpz_class p;
  mpz_class q;
  mpq_class residual_lo, residual_hi;  // brackets q*theta - p
  mpq_class bound_lo, bound_hi;        // brackets (theta - 1) a^(-2N)
  bool strict = false;                 // 0 < residual < bound certified
};

LiouvilleWitness liouville_witness(unsigned long a, unsigned long N);

// Smallest m <= m_max such that the block occurs among the first n digits of
// m*x in base g. m_max defaults to 2 g^(k+1) for block length k.
struct BlockSearchResult {
  bool found = false;
  long m = 0;
  long position = 0;  // 1-based digit index of the first occurrence
  long m_max = 0;
};

BlockSearchResult block_search(SourcePtr x, int g, const std::vector<int>& block,
                               long horizon, long m_max = 0);

}  // namespace wordnum
