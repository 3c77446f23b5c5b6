#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wordnum/reals.hpp"

namespace wordnum {

// One component c / (k n + m) of a digit formula, summed over n >= 1.
struct BbpTerm {
  long c = 0;
  long k = 1;
  long m = 0;
};

// theta = sum_{n>=1} p(n)/q(n) g^-n where p/q is the combined rational
// function of the terms. Named entries without a published term-level
// formula carry formula_given = false and are evaluated through an
// independently computed constant instead.
struct BbpSpec {
  std::string name;
  int g = 2;
  std::vector<BbpTerm> terms;
  bool formula_given = false;
  std::string note;

  // g >= 2; each term has c != 0, k >= 1 and k + m >= 1 (so the denominator
  // is positive for every n >= 1), and no two terms share a pole.
  void validate() const;
};

// p(n)/q(n) at integer n >= 1, exact.
mpq_class bbp_term_value(const BbpSpec& spec, long n);

// Ascending coefficients of q(X) = prod_j (k_j X + m_j) and of the matching
// numerator p(X) = sum_j c_j prod_{i != j} (k_i X + m_i); deg p < deg q.
std::vector<mpz_class> bbp_denominator_poly(const BbpSpec& spec);
std::vector<mpz_class> bbp_numerator_poly(const BbpSpec& spec);

const std::vector<BbpSpec>& bbp_catalog();
const BbpSpec& bbp_spec(const std::string& name);

// Certified value of the spec (series summation for formula-backed specs,
// independent constants otherwise).
SourcePtr bbp_eval(const BbpSpec& spec);

// Fractional digits d .. d+k-1 (1-based) of the value, computed without the
// earlier digits: per-term modular exponentiation into a 128-bit fixed-point
// accumulator. A boundary audit bounds the accumulated truncation error; if
// the digits cannot be vouched for, the result is recomputed from the
// certified value at full precision. Results with d + k <= 200 are always
// cross-checked against the certified value.
std::vector<int> bbp_extract_digits(const BbpSpec& spec, long d, long k);

// y_0 = 0 and y_n = g y_{n-1} + p(n)/q(n) mod 1, carried in fixed point with
// n_max ceil(log2 g) + 96 working bits; reported values are truncated to 128
// fractional bits (so they carry well over 64 correct bits).
std::vector<mpq_class> hypothesis_a_orbit(const BbpSpec& spec, long n_max);

// Star discrepancy D*_N, exact over the sorted points; all points must lie
// in [0, 1).
mpq_class star_discrepancy(const std::vector<mpq_class>& points);

// Checks |{g^n theta} - y_n| (distance mod 1) against the exact series tail
// bound for every n <= n_max.
bool verify_orbit_tail(const BbpSpec& spec, long n_max);

// JSON interchange: {"g": 16, "terms": [{"c": 64, "k": 8, "m": -7}, ...]},
// terms in the n >= 1 convention.
BbpSpec bbp_spec_from_json(const std::string& text);
std::string bbp_spec_to_json(const BbpSpec& spec);

}  // namespace wordnum
