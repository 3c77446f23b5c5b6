#include "wordnum/sources.hpp"

#include <stdexcept>

#include "wordnum/automata.hpp"
#include "wordnum/bbp.hpp"
#include "wordnum/constructions.hpp"
#include "wordnum/fibonacci.hpp"

namespace wordnum {

namespace {

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long v = std::stol(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad integer: " + text);
  return v;
}

}  // namespace

SourcePtr parse_source(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  std::string head = descriptor.substr(0, colon);
  std::string rest =
      colon == std::string::npos ? std::string() : descriptor.substr(colon + 1);
  if (head == "sqrt") return sqrt_source(parse_long(rest));
  if (head == "rational") {
    auto slash = rest.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("rational descriptor needs P/Q");
    return rational_source(mpz_class(rest.substr(0, slash)),
                           mpz_class(rest.substr(slash + 1)));
  }
  if (head == "lacunary") return lacunary_builtin(rest);
  if (head == "stoneham") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("stoneham descriptor needs A,G");
    return korobov_stoneham(parse_long(rest.substr(0, comma)),
                            parse_long(rest.substr(comma + 1)));
  }
  if (head == "champernowne") return champernowne(static_cast<int>(parse_long(rest)));
  if (head == "copeland-erdos")
    return copeland_erdos(static_cast<int>(parse_long(rest)));
  if (head == "bbp") return bbp_eval(bbp_spec(rest));
  if (head == "eta") return eta_source();
  if (head == "pi") return pi_source();
  if (head == "zeta3") return zeta3_source();
  throw std::invalid_argument("unknown source descriptor: " + descriptor);
}

std::vector<std::string> source_descriptor_help() {
  return {"sqrt:D",      "rational:P/Q",    "lacunary:2^n", "lacunary:n!",
          "lacunary:fib", "stoneham:A,G",   "champernowne:G",
          "copeland-erdos:G", "bbp:NAME",   "eta",          "pi",
          "zeta3"};
}

StreamPtr named_stream(const std::string& name) {
  if (name == "fib") {
    Morphism m = named_morphism("fib");
    return fixed_point(m, m.source().index_of("a"));
  }
  if (name == "ptm") return dfao_word(dfao_builtin("ptm"));
  if (name == "baum_sweet") return dfao_word(dfao_builtin("baum_sweet"));
  if (name == "paper_fold") return dfao_word(dfao_builtin("paper_fold"));
  if (name == "rudin_shapiro") return predicate_word("rudin_shapiro_11count");
  if (name == "eta") {
    Morphism m = named_morphism("eta");
    return fixed_point(m, m.source().index_of("0"));
  }
  if (name == "powers2")
    return function_stream(Alphabet::binary(), [](std::size_t i) {
      std::size_t n = i + 1;
      return (n & (n - 1)) == 0 ? 1 : 0;
    });
  if (name == "powers2_auto") return dfao_word(dfao_builtin("powers2"));
  if (name == "rabbit")
    return function_stream(Alphabet({"A", "Y"}), [](std::size_t i) {
      return rabbit(i + 1) == 'Y' ? 1 : 0;
    });
  if (name == "danilov") return danilov_stream();
  throw std::invalid_argument("unknown word: " + name);
}

std::vector<std::string> named_stream_catalog() {
  return {"fib",  "ptm",     "baum_sweet", "paper_fold", "rudin_shapiro",
          "eta",  "powers2", "powers2_auto", "rabbit",   "danilov"};
}

}  // namespace wordnum
