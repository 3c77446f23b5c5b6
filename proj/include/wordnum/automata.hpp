#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "wordnum/words.hpp"

namespace wordnum {

// Deterministic finite automaton with output over base-g digit strings.
struct Dfao {
  int base = 2;
  std::vector<std::string> state_names;
  int initial = 0;
  // transitions[state][digit] -> state; dense and total.
  std::vector<std::vector<int>> transitions;
  Alphabet output_alphabet;
  std::vector<Symbol> output;  // by state

  void validate() const;
  nlohmann::json to_json() const;
  static Dfao from_json(const nlohmann::json& j);
};

enum class DigitOrder { lsd_first, msd_first };

// Digits of n in base g without leading zeros; n = 0 yields the empty string.
std::vector<int> base_digits_of(const mpz_class& n, int g);

Symbol dfao_eval(const Dfao& m, const mpz_class& n,
                 DigitOrder order = DigitOrder::lsd_first);

struct EvalTrace {
  std::vector<int> digits;  // in consumption order
  std::vector<int> states;  // visited states, initial first (digits+1 entries)
  Symbol out = 0;
  std::string render(const Dfao& m) const;
};

EvalTrace dfao_eval_trace(const Dfao& m, const mpz_class& n,
                          DigitOrder order = DigitOrder::lsd_first);

// Stream position n equals dfao_eval(m, n).
StreamPtr dfao_word(const Dfao& m, DigitOrder order = DigitOrder::lsd_first);

// Builtins: powers2, ptm, baum_sweet, paper_fold.
Dfao dfao_builtin(const std::string& name);
std::vector<std::string> dfao_catalog();

// Arithmetic-definition oracles, independent of any automaton:
//   ptm_popcount          parity of 1-bits of n             over {0,1}
//   baum_sweet_blocks     no odd-length 0-block in binary n over {0,1}
//   rudin_shapiro_11count parity of "11" occurrences        over {a,b}
//   paper_fold_recursive  u_n = a_{n+1}, a_{2^k+r} = 1-a_{2^k-r} over {0,1}
//   powers2_indicator     n is a power of two               over {0,1}
StreamPtr predicate_word(const std::string& kind);

}  // namespace wordnum
