#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordnum/automata.hpp"
#include "wordnum/bbp.hpp"
#include "wordnum/complexity.hpp"
#include "wordnum/constructions.hpp"
#include "wordnum/contfrac.hpp"
#include "wordnum/fibonacci.hpp"
#include "wordnum/fpseries.hpp"
#include "wordnum/sources.hpp"

namespace {

using nlohmann::json;
using namespace wordnum;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join_longs(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string digits_to_string(const std::vector<int>& digits, int g) {
  static const char* kGlyphs = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (g <= 36) {
      out += kGlyphs[digits[i]];
    } else {
      if (i) out += ',';
      out += std::to_string(digits[i]);
    }
  }
  return out;
}

std::string quotient_list(const ContinuedFraction& cf) {
  std::string out = cf.a0.get_str() + ";";
  for (std::size_t i = 0; i < cf.a.size(); ++i) {
    if (i) out += ',';
    out += cf.a[i].get_str();
  }
  return out;
}

struct Options {
  std::string format = "csv";
  bool json() const { return format == "json"; }
};

int run(int argc, char** argv) {
  CLI::App app{"word combinatorics and certified digit expansions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // word
  auto* word_cmd = app.add_subcommand("word", "prefix of a named infinite word");
  std::string word_name, word_morphism;
  long word_prefix = 32;
  word_cmd->add_option("--name", word_name, "named word");
  word_cmd->add_option("--morphism", word_morphism,
                       "named morphism, expanded from its fixed point");
  word_cmd->add_option("--prefix", word_prefix, "symbols to print");

  // automaton
  auto* auto_cmd = app.add_subcommand("automaton", "automaton with output");
  auto* auto_eval = auto_cmd->add_subcommand("eval", "evaluate at one position");
  auto* auto_word = auto_cmd->add_subcommand("word", "word generated by the automaton");
  auto* auto_export = auto_cmd->add_subcommand("export", "JSON description");
  auto_cmd->require_subcommand(1);
  std::string auto_name = "ptm";
  std::string auto_n = "0";
  long auto_prefix = 32;
  bool auto_msd = false, auto_trace = false;
  for (auto* c : {auto_eval, auto_word, auto_export})
    c->add_option("--name", auto_name, "builtin automaton")->required();
  auto_eval->add_option("--n", auto_n, "position");
  auto_eval->add_flag("--trace", auto_trace, "print the state trace");
  auto_word->add_option("--prefix", auto_prefix, "symbols to print");
  for (auto* c : {auto_eval, auto_word})
    c->add_flag("--msd", auto_msd, "consume digits most significant first");

  // complexity
  auto* cx_cmd = app.add_subcommand("complexity", "factor counts");
  std::string cx_word, cx_source;
  int cx_base = 2;
  long cx_max_m = 6, cx_horizon = 4096;
  double cx_eta = 1.0 / 11.0;
  cx_cmd->add_option("--word", cx_word, "named word");
  cx_cmd->add_option("--source", cx_source, "digit source descriptor");
  cx_cmd->add_option("--base", cx_base, "digit base for --source");
  cx_cmd->add_option("--max-m", cx_max_m, "largest factor length");
  cx_cmd->add_option("--horizon", cx_horizon, "prefix length scanned");
  cx_cmd->add_option("--eta", cx_eta, "exponent of the log factor");

  // fib
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci numeration");
  auto* fib_zeck = fib_cmd->add_subcommand("zeckendorf", "greedy decomposition");
  auto* fib_rabbit = fib_cmd->add_subcommand("rabbit", "rabbit letter R_n");
  auto* fib_beatty = fib_cmd->add_subcommand("beatty", "floor multiples");
  fib_cmd->require_subcommand(1);
  std::uint64_t fib_n = 1;
  fib_zeck->add_option("n", fib_n, "target")->required();
  fib_rabbit->add_option("n", fib_n, "index")->required();
  std::string beatty_kind = "phi";
  long beatty_count = 10;
  fib_beatty->add_option("--kind", beatty_kind, "phi or phi2")
      ->check(CLI::IsMember({"phi", "phi2"}));
  fib_beatty->add_option("--count", beatty_count, "how many floors");

  // digits
  auto* dg_cmd = app.add_subcommand("digits", "certified digit expansion");
  std::string dg_source;
  int dg_base = 10;
  long dg_count = 50, dg_start = 1;
  dg_cmd->add_option("--source", dg_source, "source descriptor")->required();
  dg_cmd->add_option("--base", dg_base, "digit base");
  dg_cmd->add_option("--count", dg_count, "digits to print");
  dg_cmd->add_option("--start", dg_start, "first digit position (1-based)");

  // normality
  auto* nm_cmd = app.add_subcommand("normality", "block frequency statistics");
  std::string nm_source;
  int nm_base = 2, nm_block = 1;
  long nm_count = 100000;
  double nm_threshold = 0.01;
  nm_cmd->add_option("--source", nm_source, "source descriptor")->required();
  nm_cmd->add_option("--base", nm_base, "digit base");
  nm_cmd->add_option("--block-len", nm_block, "block length");
  nm_cmd->add_option("--count", nm_count, "digits scanned");
  nm_cmd->add_option("--threshold", nm_threshold, "deviation threshold");

  // bbp
  auto* bbp_cmd = app.add_subcommand("bbp", "digit formulas");
  auto* bbp_ev = bbp_cmd->add_subcommand("eval", "fractional digits of the value");
  auto* bbp_dig = bbp_cmd->add_subcommand("digit", "extract digits at a position");
  auto* bbp_orb = bbp_cmd->add_subcommand("orbit", "shift-orbit simulation");
  bbp_cmd->require_subcommand(1);
  std::string bbp_name;
  long bbp_count = 16, bbp_position = 1;
  bool bbp_dstar = false;
  for (auto* c : {bbp_ev, bbp_dig, bbp_orb})
    c->add_option("--spec", bbp_name, "spec name")->required();
  bbp_ev->add_option("--count", bbp_count, "digit count");
  bbp_dig->add_option("--position", bbp_position, "first digit position (1-based)");
  bbp_dig->add_option("--count", bbp_count, "digit count");
  bbp_orb->add_option("--count", bbp_count, "orbit length");
  bbp_orb->add_flag("--discrepancy", bbp_dstar, "append the star discrepancy");

  // fpseries
  auto* fp_cmd = app.add_subcommand("fpseries", "truncated power series");
  auto* fp_ptm = fp_cmd->add_subcommand("verify-ptm", "cubic identity over F_2");
  auto* fp_mahler = fp_cmd->add_subcommand("mahler", "sparse product expansion");
  fp_cmd->require_subcommand(1);
  long fp_order = 256;
  fp_ptm->add_option("--order", fp_order, "truncation order");
  fp_mahler->add_option("--order", fp_order, "truncation order");

  // cf
  auto* cf_cmd = app.add_subcommand("cf", "continued fractions");
  auto* cf_ex = cf_cmd->add_subcommand("expand", "expansion of a source");
  auto* cf_fw = cf_cmd->add_subcommand("from-word", "quotients from a word");
  auto* cf_roy = cf_cmd->add_subcommand("roy", "simultaneous approximation scan");
  cf_cmd->require_subcommand(1);
  std::string cf_source, cf_word = "fib";
  long cf_terms = 20, cf_a = 1, cf_b = 2, cf_xmax = 10000;
  cf_ex->add_option("--source", cf_source, "source descriptor")->required();
  cf_ex->add_option("--terms", cf_terms, "partial quotients");
  cf_fw->add_option("--word", cf_word, "named word");
  cf_fw->add_option("--A", cf_a, "value for the first letter");
  cf_fw->add_option("--B", cf_b, "value for the second letter");
  cf_fw->add_option("--terms", cf_terms, "partial quotients");
  cf_roy->add_option("--A", cf_a, "value for the first letter");
  cf_roy->add_option("--B", cf_b, "value for the second letter");
  cf_roy->add_option("--xmax", cf_xmax, "largest X in the log-spaced grid");

  // patterns
  auto* pt_cmd = app.add_subcommand("patterns", "repetition and palindrome census");
  std::string pt_word = "ptm", pt_kind = "square";
  long pt_w_num = 2, pt_w_den = 1, pt_horizon = 10000, pt_min_total = 1,
       pt_max_hits = 20;
  pt_cmd->add_option("--word", pt_word, "named word");
  pt_cmd->add_option("--kind", pt_kind, "pattern kind")
      ->check(CLI::IsMember({"square", "overlap", "w-power", "palindrome"}));
  pt_cmd->add_option("--w-num", pt_w_num, "power numerator");
  pt_cmd->add_option("--w-den", pt_w_den, "power denominator");
  pt_cmd->add_option("--horizon", pt_horizon, "prefix length scanned");
  pt_cmd->add_option("--min-total", pt_min_total, "smallest hit length reported");
  pt_cmd->add_option("--max-hits", pt_max_hits, "cap on reported hits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (word_cmd->parsed()) {
    StreamPtr stream;
    if (!word_morphism.empty()) {
      Morphism m = named_morphism(word_morphism);
      stream = fixed_point(m, 0);
    } else if (!word_name.empty()) {
      stream = named_stream(word_name);
    } else {
      throw std::invalid_argument("need --name or --morphism");
    }
    Word w = stream->prefix(word_prefix);
    if (opt.json()) {
      json j{{"prefix", w.str()},
             {"name", word_morphism.empty() ? word_name : word_morphism}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << w.str() << "\n";
    }
    return 0;
  }

  if (auto_cmd->parsed()) {
    Dfao m = dfao_builtin(auto_name);
    DigitOrder order = auto_msd ? DigitOrder::msd_first : DigitOrder::lsd_first;
    if (auto_export->parsed()) {
      std::cout << m.to_json().dump(2) << "\n";
      return 0;
    }
    if (auto_eval->parsed()) {
      mpz_class n(auto_n);
      EvalTrace trace = dfao_eval_trace(m, n, order);
      if (opt.json()) {
        json j{{"n", auto_n},
               {"output", m.output_alphabet.glyph(trace.out)},
               {"states", trace.states},
               {"digits", trace.digits}};
        std::cout << j.dump() << "\n";
      } else {
        if (auto_trace)
          std::cout << trace.render(m) << "\n";
        else
          std::cout << m.output_alphabet.glyph(trace.out) << "\n";
      }
      return 0;
    }
    auto stream = dfao_word(m, order);
    Word w = stream->prefix(auto_prefix);
    if (opt.json()) {
      json j{{"name", auto_name}, {"prefix", w.str()}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << w.str() << "\n";
    }
    return 0;
  }

  if (cx_cmd->parsed()) {
    if (!cx_word.empty() == !cx_source.empty())
      throw std::invalid_argument("need exactly one of --word or --source");
    if (!cx_word.empty()) {
      auto stream = named_stream(cx_word);
      auto profile = complexity(*stream, cx_max_m, cx_horizon);
      if (opt.json()) {
        json j{{"word", cx_word}, {"horizon", cx_horizon}, {"p", profile.p}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << join_longs(profile.p) << "\n";
      }
      return 0;
    }
    auto src = parse_source(cx_source);
    auto rep = complexity_growth_report(*src, cx_base, cx_max_m, cx_horizon, cx_eta);
    if (opt.json()) {
      json rows = json::array();
      for (const auto& r : rep.rows) {
        json row{{"m", r.m}, {"p", r.p}, {"per_m", r.per_m}};
        if (r.adjusted) row["adjusted"] = *r.adjusted;
        rows.push_back(row);
      }
      json j{{"source", cx_source},
             {"base", rep.base},
             {"horizon", rep.horizon},
             {"eta", rep.eta},
             {"rows", rows}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "m,p,p_per_m,adjusted\n";
      for (const auto& r : rep.rows) {
        std::cout << r.m << ',' << r.p << ',' << fmt_double(r.per_m) << ','
                  << (r.adjusted ? fmt_double(*r.adjusted) : std::string()) << "\n";
      }
    }
    return 0;
  }

  if (fib_cmd->parsed()) {
    if (fib_zeck->parsed()) {
      auto z = zeckendorf(fib_n);
      std::string list;
      for (std::size_t i = 0; i < z.indices.size(); ++i) {
        if (i) list += ',';
        list += std::to_string(z.indices[i]);
      }
      if (opt.json()) {
        json j{{"n", fib_n}, {"indices", z.indices}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << list << "\n";
      }
      return 0;
    }
    if (fib_rabbit->parsed()) {
      char r = rabbit(fib_n);
      if (opt.json()) {
        json j{{"n", fib_n}, {"letter", std::string(1, r)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << r << "\n";
      }
      return 0;
    }
    auto kind = beatty_kind == "phi" ? BeattyKind::phi : BeattyKind::phi_squared;
    auto values = beatty_indices(kind, beatty_count);
    std::string list;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) list += ',';
      list += std::to_string(values[i]);
    }
    if (opt.json()) {
      json j{{"kind", beatty_kind}, {"values", values}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << list << "\n";
    }
    return 0;
  }

  if (dg_cmd->parsed()) {
    if (dg_start < 1) throw std::invalid_argument("--start must be >= 1");
    auto src = parse_source(dg_source);
    auto all = src->digit_vector(dg_base, dg_start - 1 + dg_count);
    std::vector<int> slice(all.begin() + (dg_start - 1), all.end());
    std::string text = digits_to_string(slice, dg_base);
    if (opt.json()) {
      json j{{"source", dg_source},
             {"base", dg_base},
             {"start", dg_start},
             {"digits", text}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
    return 0;
  }

  if (nm_cmd->parsed()) {
    auto src = parse_source(nm_source);
    auto st = normality_stats(*src, nm_base, nm_block, nm_count, nm_threshold);
    if (opt.json()) {
      json j{{"source", nm_source},
             {"base", st.base},
             {"block_len", st.block_len},
             {"horizon", st.horizon},
             {"max_deviation", st.max_deviation},
             {"threshold", st.threshold},
             {"consistent", st.consistent},
             {"horizon_warning", st.horizon_warning},
             {"freq", st.freq}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "base,block_len,horizon,max_deviation,threshold,consistent,"
                   "horizon_warning\n";
      std::cout << st.base << ',' << st.block_len << ',' << st.horizon << ','
                << fmt_double(st.max_deviation) << ',' << fmt_double(st.threshold)
                << ',' << (st.consistent ? "true" : "false") << ','
                << (st.horizon_warning ? "true" : "false") << "\n";
      for (const auto& [block, f] : st.freq)
        std::cout << block << ',' << fmt_double(f) << "\n";
    }
    return 0;
  }

  if (bbp_cmd->parsed()) {
    const BbpSpec& spec = bbp_spec(bbp_name);
    if (bbp_ev->parsed()) {
      auto src = bbp_eval(spec);
      std::string text = digits_to_string(src->digit_vector(spec.g, bbp_count), spec.g);
      if (opt.json()) {
        json j{{"spec", spec.name}, {"base", spec.g}, {"digits", text}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << text << "\n";
      }
      return 0;
    }
    if (bbp_dig->parsed()) {
      auto digits = bbp_extract_digits(spec, bbp_position, bbp_count);
      std::string text = digits_to_string(digits, spec.g);
      if (opt.json()) {
        json j{{"spec", spec.name},
               {"base", spec.g},
               {"position", bbp_position},
               {"digits", text}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << text << "\n";
      }
      return 0;
    }
    auto orbit = hypothesis_a_orbit(spec, bbp_count);
    if (opt.json()) {
      json ys = json::array();
      for (const auto& y : orbit) ys.push_back(to_string(y, 18));
      json j{{"spec", spec.name}, {"y", ys}};
      if (bbp_dstar) {
        auto d = star_discrepancy(
            std::vector<mpq_class>(orbit.begin() + 1, orbit.end()));
        j["dstar"] = to_string(d, 18);
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "n,y\n";
      for (std::size_t i = 0; i < orbit.size(); ++i)
        std::cout << i << ',' << to_string(orbit[i], 18) << "\n";
      if (bbp_dstar) {
        auto d = star_discrepancy(
            std::vector<mpq_class>(orbit.begin() + 1, orbit.end()));
        std::cout << "dstar," << to_string(d, 18) << "\n";
      }
    }
    return 0;
  }

  if (fp_cmd->parsed()) {
    if (fp_ptm->parsed()) {
      bool ok = verify_ptm_cubic(fp_order);
      if (opt.json()) {
        json j{{"order", fp_order}, {"holds", ok}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (ok ? "true" : "false") << "\n";
      }
      return 0;
    }
    auto series = mahler_product(fp_order);
    bool feq = verify_mahler_functional_equation(fp_order);
    if (opt.json()) {
      json j{{"order", fp_order},
             {"coefficients", series.c},
             {"functional_equation", feq}};
      std::cout << j.dump() << "\n";
    } else {
      std::string list;
      for (std::size_t i = 0; i < series.c.size(); ++i) {
        if (i) list += ',';
        list += std::to_string(series.c[i]);
      }
      std::cout << list << "\n";
      std::cout << (feq ? "true" : "false") << "\n";
    }
    return 0;
  }

  if (cf_cmd->parsed()) {
    if (cf_ex->parsed()) {
      auto src = parse_source(cf_source);
      auto cf = cf_expand(src, cf_terms);
      if (opt.json()) {
        json quotients = json::array();
        for (const auto& q : cf.a) quotients.push_back(q.get_str());
        json j{{"source", cf_source},
               {"a0", cf.a0.get_str()},
               {"a", quotients}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << quotient_list(cf) << "\n";
      }
      return 0;
    }
    if (cf_fw->parsed()) {
      auto stream = named_stream(cf_word);
      auto cf = cf_from_word(*stream, cf_a, cf_b, cf_terms);
      if (opt.json()) {
        json quotients = json::array();
        for (const auto& q : cf.a) quotients.push_back(q.get_str());
        json j{{"word", cf_word}, {"a0", cf.a0.get_str()}, {"a", quotients}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << quotient_list(cf) << "\n";
      }
      return 0;
    }
    std::vector<long> grid;
    for (int k = 2;; ++k) {
      long x = static_cast<long>(std::floor(std::pow(10.0, k / 2.0)));
      if (x > cf_xmax) break;
      grid.push_back(x);
    }
    if (grid.empty() || grid.back() != cf_xmax) grid.push_back(cf_xmax);
    auto rep = roy_check(cf_a, cf_b, grid);
    if (opt.json()) {
      json rows = json::array();
      for (const auto& r : rep.rows)
        rows.push_back(json{{"X", r.x_bound},
                            {"x0", r.x0},
                            {"x1", r.x1.get_str()},
                            {"x2", r.x2.get_str()},
                            {"err1", r.err1},
                            {"err2", r.err2},
                            {"s", r.s}});
      json j{{"A", rep.a_value},
             {"B", rep.b_value},
             {"exponent", rep.exponent},
             {"rows", rows},
             {"c_emp", rep.c_emp}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "X,x0,x1,x2,err1,err2,s\n";
      for (const auto& r : rep.rows)
        std::cout << r.x_bound << ',' << r.x0 << ',' << r.x1.get_str() << ','
                  << r.x2.get_str() << ',' << fmt_double(r.err1) << ','
                  << fmt_double(r.err2) << ',' << fmt_double(r.s) << "\n";
      std::cout << "c_emp," << fmt_double(rep.c_emp) << "\n";
    }
    return 0;
  }

  if (pt_cmd->parsed()) {
    auto stream = named_stream(pt_word);
    PatternQuery q;
    if (pt_kind == "square") q.kind = PatternKind::square;
    if (pt_kind == "overlap") q.kind = PatternKind::overlap;
    if (pt_kind == "w-power") q.kind = PatternKind::w_power;
    if (pt_kind == "palindrome") q.kind = PatternKind::palindrome;
    q.w_num = pt_w_num;
    q.w_den = pt_w_den;
    q.min_total = pt_min_total;
    q.max_hits = static_cast<std::size_t>(pt_max_hits);
    auto hits = find_patterns(*stream, q, pt_horizon);
    if (opt.json()) {
      json rows = json::array();
      for (const auto& h : hits)
        rows.push_back(json{{"start", h.start},
                            {"root_len", h.root_len},
                            {"total_len", h.total_len}});
      json j{{"word", pt_word},
             {"kind", pt_kind},
             {"horizon", pt_horizon},
             {"count", hits.size()},
             {"hits", rows}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "count," << hits.size() << "\n";
      for (const auto& h : hits)
        std::cout << h.start << ',' << h.root_len << ',' << h.total_len << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wordnum::precision_limit_error& e) {
    std::cerr << "precision limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
