#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wordnum/reals.hpp"
#include "wordnum/words.hpp"

namespace wordnum {

struct ContinuedFraction {
  mpz_class a0;
  std::vector<mpz_class> a;  // partial quotients a_1, a_2, ... (each >= 1)
  std::string provenance;
};

struct Convergent {
  mpz_class p;
  mpz_class q;
  long n = 0;
};

// Certified expansion of an irrational source: the working precision is
// raised until every emitted partial quotient has an unambiguous floor.
// Rational inputs are rejected (directly when recognizable, otherwise via
// the precision ceiling).
ContinuedFraction cf_expand(SourcePtr x, long n_terms);

// [0; s(w_0), s(w_1), ...] where s maps the word's first letter to a_value
// and its second letter to b_value.
ContinuedFraction cf_from_word(WordStream& w, long a_value, long b_value,
                               long n_terms);

// Convergents p_0/q_0 .. p_n/q_n by the standard recurrence; they satisfy
// p_n q_{n-1} - p_{n-1} q_n = (-1)^(n-1).
std::vector<Convergent> convergents(const ContinuedFraction& cf, long n);

// kappa_n = 1 + log q_{n+1} / log q_n, the approximation exponent realized
// by the convergent p_n/q_n.
struct KappaReport {
  long first_index = 2;
  std::vector<double> kappa;  // kappa_2 .. kappa_n
  double max_kappa = 0;
  // Intercept of the least-squares line of kappa_i against 1/ln q_i over the
  // tail window [max(2, n/4), n]: where the exponent sequence is heading as
  // q grows.
  double tail_trend = 0;
};

KappaReport irrationality_exponent_estimate(const ContinuedFraction& cf, long n);

struct RoyRow {
  long x_bound = 0;  // X
  long x0 = 0;       // minimizing 1 <= x0 <= X
  mpz_class x1;      // nearest integer to x0 xi
  mpz_class x2;      // nearest integer to x0 xi^2
  double err1 = 0;   // |x0 xi - x1|
  double err2 = 0;   // |x0 xi^2 - x2|
  double s = 0;      // max(err1, err2) * X^(1/Phi)
};

struct RoyReport {
  long a_value = 0;
  long b_value = 0;
  double exponent = 0;  // 1/Phi
  std::vector<RoyRow> rows;
  double c_emp = 0;  // max of s over the grid
};

// Exhaustive simultaneous-approximation search against the value of the
// Fibonacci-word continued fraction [0; s(w_0), s(w_1), ...]. Precision
// defaults to 2 log2(max X) + 64 bits and can only be raised.
RoyReport roy_check(long a_value, long b_value, const std::vector<long>& x_grid,
                    long precision_bits = 0);

}  // namespace wordnum
