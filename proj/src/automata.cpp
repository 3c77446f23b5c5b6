#include "wordnum/automata.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace wordnum {

void Dfao::validate() const {
  if (base < 2) throw std::invalid_argument("automaton base must be >= 2");
  int n = static_cast<int>(state_names.size());
  if (n == 0) throw std::invalid_argument("automaton needs at least one state");
  if (initial < 0 || initial >= n)
    throw std::invalid_argument("initial state out of range");
  if (static_cast<int>(transitions.size()) != n ||
      static_cast<int>(output.size()) != n)
    throw std::invalid_argument("transition/output tables must cover all states");
  for (const auto& row : transitions) {
    if (static_cast<int>(row.size()) != base)
      throw std::invalid_argument("transition row must cover all digits");
    for (int t : row)
      if (t < 0 || t >= n) throw std::invalid_argument("transition target out of range");
  }
  for (Symbol s : output)
    if (s < 0 || s >= output_alphabet.size())
      throw std::invalid_argument("output symbol outside output alphabet");
}

nlohmann::json Dfao::to_json() const {
  nlohmann::json j;
  j["base"] = base;
  j["states"] = state_names;
  j["initial"] = state_names.at(initial);
  j["transitions"] = transitions;
  j["output_alphabet"] = output_alphabet.glyphs();
  std::vector<std::string> out;
  for (Symbol s : output) out.push_back(output_alphabet.glyph(s));
  j["output"] = out;
  return j;
}

Dfao Dfao::from_json(const nlohmann::json& j) {
  Dfao m;
  m.base = j.at("base").get<int>();
  m.state_names = j.at("states").get<std::vector<std::string>>();
  auto init = j.at("initial").get<std::string>();
  auto it = std::find(m.state_names.begin(), m.state_names.end(), init);
  if (it == m.state_names.end())
    throw std::invalid_argument("initial state not among states");
  m.initial = static_cast<int>(it - m.state_names.begin());
  m.transitions = j.at("transitions").get<std::vector<std::vector<int>>>();
  m.output_alphabet =
      Alphabet(j.at("output_alphabet").get<std::vector<std::string>>());
  for (const auto& g : j.at("output").get<std::vector<std::string>>())
    m.output.push_back(m.output_alphabet.index_of(g));
  m.validate();
  return m;
}

std::vector<int> base_digits_of(const mpz_class& n, int g) {
  if (n < 0) throw std::invalid_argument("negative input");
  if (g < 2) throw std::invalid_argument("digit base must be >= 2");
  std::vector<int> digits;  // least significant first
  mpz_class v = n;
  while (v != 0) {
    mpz_class r = v % g;
    digits.push_back(static_cast<int>(r.get_ui()));
    v /= g;
  }
  return digits;
}

namespace {

int run_digits(const Dfao& m, const std::vector<int>& lsd_digits,
               DigitOrder order) {
  int state = m.initial;
  if (order == DigitOrder::lsd_first) {
    for (int d : lsd_digits) state = m.transitions[state][d];
  } else {
    for (auto it = lsd_digits.rbegin(); it != lsd_digits.rend(); ++it)
      state = m.transitions[state][*it];
  }
  return state;
}

}  // namespace

Symbol dfao_eval(const Dfao& m, const mpz_class& n, DigitOrder order) {
  return m.output[run_digits(m, base_digits_of(n, m.base), order)];
}

EvalTrace dfao_eval_trace(const Dfao& m, const mpz_class& n, DigitOrder order) {
  EvalTrace t;
  t.digits = base_digits_of(n, m.base);
  if (order == DigitOrder::msd_first)
    std::reverse(t.digits.begin(), t.digits.end());
  int state = m.initial;
  t.states.push_back(state);
  for (int d : t.digits) {
    state = m.transitions[state][d];
    t.states.push_back(state);
  }
  t.out = m.output[state];
  return t;
}

std::string EvalTrace::render(const Dfao& m) const {
  std::string s = m.state_names[states.front()];
  for (std::size_t i = 0; i < digits.size(); ++i) {
    s += " -(" + std::to_string(digits[i]) + ")-> ";
    s += m.state_names[states[i + 1]];
  }
  s += " => " + m.output_alphabet.glyph(out);
  return s;
}

StreamPtr dfao_word(const Dfao& m, DigitOrder order) {
  Dfao copy = m;
  return function_stream(m.output_alphabet, [copy, order](std::size_t n) {
    return dfao_eval(copy, mpz_class(static_cast<unsigned long>(n)), order);
  });
}

Dfao dfao_builtin(const std::string& name) {
  Dfao m;
  m.base = 2;
  if (name == "powers2") {
    m.state_names = {"i", "a", "b"};
    m.transitions = {{0, 1}, {1, 2}, {2, 2}};
    m.output_alphabet = Alphabet::binary();
    m.output = {0, 1, 0};
  } else if (name == "ptm") {
    m.state_names = {"i", "a"};
    m.transitions = {{0, 1}, {1, 0}};
    m.output_alphabet = Alphabet::binary();
    m.output = {0, 1};
  } else if (name == "baum_sweet") {
    m.state_names = {"i", "a", "b"};
    m.transitions = {{1, 0}, {0, 2}, {2, 2}};
    m.output_alphabet = Alphabet::binary();
    m.output = {1, 0, 0};
  } else if (name == "paper_fold") {
    m.state_names = {"i", "a", "b", "c"};
    m.transitions = {{1, 0}, {2, 3}, {2, 2}, {3, 3}};
    m.output_alphabet = Alphabet::binary();
    m.output = {1, 1, 1, 0};
  } else {
    throw std::invalid_argument("unknown automaton: " + name);
  }
  m.validate();
  return m;
}

std::vector<std::string> dfao_catalog() {
  return {"powers2", "ptm", "baum_sweet", "paper_fold"};
}

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Baum-Sweet: 1 iff the binary expansion of n contains no block of
// consecutive 0s of odd length (n = 0 has no blocks). Every maximal zero
// block is bounded above by a 1, so scanning LSD-first and checking the run
// length at each 1 covers all blocks.
Symbol baum_sweet_def(std::size_t n) {
  int zero_run = 0;
  while (n != 0) {
    if (n & 1) {
      if (zero_run % 2 != 0) return 0;
      zero_run = 0;
    } else {
      ++zero_run;
    }
    n >>= 1;
  }
  return 1;
}

// Rudin-Shapiro: parity of occurrences of "11" in the binary expansion.
Symbol rs_def(std::size_t n) {
  int count = 0;
  while (n != 0) {
    if ((n & 3) == 3) ++count;
    n >>= 1;
  }
  return count % 2;
}

// Regular paper-folding a_n for n >= 1: a_{2^k} = 1 and
// a_{2^k+r} = 1 - a_{2^k-r} for 0 < r < 2^k. Each reflection n -> 2p - n
// (p the largest power of two below n) strictly decreases n.
Symbol paperfold_a(std::size_t n) {
  int flips = 0;
  while (!is_power_of_two(n)) {
    std::size_t p = 1;
    while (p * 2 < n) p *= 2;
    n = 2 * p - n;
    ++flips;
  }
  return flips % 2 == 0 ? 1 : 0;
}

}  // namespace

StreamPtr predicate_word(const std::string& kind) {
  if (kind == "ptm_popcount")
    return function_stream(Alphabet::binary(), [](std::size_t n) {
      return static_cast<Symbol>(__builtin_popcountll(n) % 2);
    });
  if (kind == "baum_sweet_blocks")
    return function_stream(Alphabet::binary(), baum_sweet_def);
  if (kind == "rudin_shapiro_11count")
    return function_stream(Alphabet::ab(), rs_def);
  if (kind == "paper_fold_recursive")
    return function_stream(Alphabet::binary(),
                           [](std::size_t n) { return paperfold_a(n + 1); });
  if (kind == "powers2_indicator")
    return function_stream(Alphabet::binary(), [](std::size_t n) {
      return static_cast<Symbol>(is_power_of_two(n) ? 1 : 0);
    });
  throw std::invalid_argument("unknown predicate word: " + kind);
}

}  // namespace wordnum
