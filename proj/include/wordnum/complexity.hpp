#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordnum/words.hpp"

namespace wordnum {

class RealSource;

// p[m-1] = number of distinct length-m factors of prefix(horizon).
// p_N(m) <= p(m) of the infinite word, with equality once the horizon is
// large enough for the word at hand.
struct ComplexityProfile {
  std::size_t horizon = 0;
  std::vector<std::size_t> p;

  std::size_t of(std::size_t m) const { return p.at(m - 1); }
};

ComplexityProfile complexity(WordStream& w, std::size_t max_m, std::size_t horizon);
ComplexityProfile complexity(const std::vector<Symbol>& symbols, std::size_t max_m);

struct SturmianReport {
  bool sturmian = false;  // p(m) = m+1 for all m <= max_m, unique right-special
  ComplexityProfile profile;
  // Per length m (index m-1): the unique right-special factor, if exactly one.
  std::vector<std::optional<Word>> right_special;
};

SturmianReport is_sturmian_up_to(WordStream& w, std::size_t max_m,
                                 std::size_t horizon);

// Counts/horizon per letter, indexed by symbol; sums to 1.
std::vector<double> letter_frequency(WordStream& w, std::size_t horizon);

enum class PatternKind { square, overlap, w_power, palindrome };

struct PatternHit {
  PatternKind kind;
  std::size_t start = 0;
  std::size_t root_len = 0;   // |W| (0 for palindromes)
  std::size_t total_len = 0;  // length of the matched substring
};

struct PatternQuery {
  PatternKind kind = PatternKind::square;
  // w-power exponent w = w_num/w_den > 1; the occurrence is W^floor(w) W'
  // with |W'| = ceil((w - floor(w)) |W|).
  long w_num = 2;
  long w_den = 1;
  std::size_t min_total = 1;  // report only hits of at least this length
  std::size_t max_hits = 100000;
};

std::vector<PatternHit> find_patterns(const std::vector<Symbol>& symbols,
                                      const PatternQuery& q);
std::vector<PatternHit> find_patterns(WordStream& w, const PatternQuery& q,
                                      std::size_t horizon);

// If the prefix is q-periodic from some index r (with r + 2q <= N), returns r.
std::optional<std::size_t> verify_bounded_period(
    const std::vector<Symbol>& symbols, std::size_t q);

// Factor-growth probe for digit expansions: p_N(m), p_N(m)/m and
// p_N(m)/(m (log m)^eta) per m (the adjusted column is absent for m = 1).
struct GrowthRow {
  std::size_t m = 0;
  std::size_t p = 0;
  double per_m = 0.0;
  std::optional<double> adjusted;
};

struct GrowthReport {
  int base = 0;
  std::size_t horizon = 0;
  double eta = 0.0;
  std::vector<GrowthRow> rows;
};

GrowthReport complexity_growth_report(RealSource& source, int base,
                                      std::size_t max_m, std::size_t horizon,
                                      double eta = 1.0 / 11.0);

}  // namespace wordnum
