#include "wordnum/bbp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace wordnum {

namespace {

mpz_class shift_left(const mpz_class& v, long bits) {
  return v << static_cast<unsigned long>(bits);
}

constexpr long kAccBits = 128;

}  // namespace

void BbpSpec::validate() const {
  if (g < 2) throw std::invalid_argument("spec base must be >= 2");
  if (formula_given && terms.empty())
    throw std::invalid_argument("formula-backed spec needs terms");
  for (const auto& t : terms) {
    if (t.c == 0) throw std::invalid_argument("zero term coefficient");
    if (t.k < 1) throw std::invalid_argument("term slope must be >= 1");
    if (t.k + t.m < 1)
      throw std::invalid_argument("term denominator must be positive at n = 1");
  }
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (terms[i].k * terms[j].m == terms[j].k * terms[i].m)
        throw std::invalid_argument("terms share a pole");
}

mpq_class bbp_term_value(const BbpSpec& spec, long n) {
  mpq_class sum = 0;
  for (const auto& t : spec.terms) {
    mpq_class part(mpz_class(t.c), mpz_class(t.k) * n + t.m);
    part.canonicalize();
    sum += part;
  }
  return sum;
}

std::vector<mpz_class> bbp_denominator_poly(const BbpSpec& spec) {
  std::vector<mpz_class> q{1};
  for (const auto& t : spec.terms) {
    std::vector<mpz_class> next(q.size() + 1, mpz_class(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i] += q[i] * t.m;
      next[i + 1] += q[i] * t.k;
    }
    q = std::move(next);
  }
  return q;
}

std::vector<mpz_class> bbp_numerator_poly(const BbpSpec& spec) {
  if (spec.terms.empty()) return {mpz_class(0)};
  std::vector<mpz_class> p(spec.terms.size(), mpz_class(0));
  for (std::size_t j = 0; j < spec.terms.size(); ++j) {
    std::vector<mpz_class> part{spec.terms[j].c};
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
      if (i == j) continue;
      std::vector<mpz_class> next(part.size() + 1, mpz_class(0));
      for (std::size_t a = 0; a < part.size(); ++a) {
        next[a] += part[a] * spec.terms[i].m;
        next[a + 1] += part[a] * spec.terms[i].k;
      }
      part = std::move(next);
    }
    for (std::size_t a = 0; a < part.size(); ++a) p[a] += part[a];
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

const std::vector<BbpSpec>& bbp_catalog() {
  static const std::vector<BbpSpec> cat = [] {
    std::vector<BbpSpec> v;
    auto formula = [&v](std::string name, int g, std::vector<BbpTerm> terms) {
      BbpSpec s;
      s.name = std::move(name);
      s.g = g;
      s.terms = std::move(terms);
      s.formula_given = true;
      s.validate();
      v.push_back(std::move(s));
    };
    auto named_only = [&v](std::string name, int g) {
      BbpSpec s;
      s.name = std::move(name);
      s.g = g;
      s.formula_given = false;
      s.note = "formula not provided; evaluated from an independent constant";
      s.validate();
      v.push_back(std::move(s));
    };
    formula("log2_base2", 2, {{1, 1, 0}});
    formula("log2_base9", 9, {{6, 2, -1}});
    formula("log3_base4", 4, {{4, 2, -1}});
    formula("pi16", 16, {{64, 8, -7}, {-32, 8, -4}, {-16, 8, -3}, {-16, 8, -2}});
    named_only("pi2_64", 64);
    named_only("pi2_81", 81);
    named_only("log2sq_64", 64);
    named_only("zeta3_4096", 4096);
    return v;
  }();
  return cat;
}

const BbpSpec& bbp_spec(const std::string& name) {
  for (const auto& s : bbp_catalog())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown spec: " + name);
}

namespace {

// Bound on |p(n)/q(n)| over n >= 1: every component magnitude peaks at n = 1.
double term_bound(const BbpSpec& spec) {
  double c = 0;
  for (const auto& t : spec.terms)
    c += std::abs(static_cast<double>(t.c)) / static_cast<double>(t.k + t.m);
  return c;
}

class BbpValueSource final : public RealSource {
 public:
  explicit BbpValueSource(BbpSpec spec) : spec_(std::move(spec)) {}
  std::string describe() const override { return "bbp:" + spec_.name; }

 private:
  Enclosure do_enclose(long bits) override {
    long work = bits + 64;
    double lg = std::log2(static_cast<double>(spec_.g));
    long extra =
        std::max(0L, static_cast<long>(std::ceil(std::log2(term_bound(spec_) + 2))));
    long n_terms =
        static_cast<long>(std::ceil(static_cast<double>(work + extra + 2) / lg)) + 1;
    mpz_class sum = 0;
    mpz_class gpow = 1;
    for (long n = 1; n <= n_terms; ++n) {
      gpow *= spec_.g;
      for (const auto& t : spec_.terms)
        sum += fdiv(shift_left(mpz_class(t.c), work),
                    (mpz_class(t.k) * n + t.m) * gpow);
    }
    // Each floored term undershoots by less than one ulp and the remaining
    // tail is below one ulp by the choice of n_terms.
    long slack = n_terms * static_cast<long>(spec_.terms.size()) + 2;
    Enclosure e;
    e.bits = work;
    e.lo = sum - 2;
    e.hi = sum + slack;
    return e.rescaled(bits);
  }
  BbpSpec spec_;
};

// Appends one audited chunk of digits; false when the truncation-error band
// reaches a digit boundary and the chunk cannot be vouched for.
bool extract_chunk(const BbpSpec& spec, long d, long k, std::vector<int>& out) {
  mpz_class acc = 0;
  mpz_class err = 0;  // ulps at 2^-kAccBits
  for (const auto& t : spec.terms) {
    mpz_class cc = std::abs(t.c);
    for (long n = 1; n <= d - 1; ++n) {
      mpz_class q = mpz_class(t.k) * n + t.m;
      mpz_class r, base(spec.g), e(d - 1 - n);
      mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
      mpz_class fx = shift_left(r, kAccBits) / q;
      if (t.c > 0)
        acc += cc * fx;
      else
        acc -= cc * fx;
      err += cc;
    }
    mpz_class gp = spec.g;
    for (long n = d;; ++n) {
      mpz_class q = mpz_class(t.k) * n + t.m;
      mpz_class fx = shift_left(cc, kAccBits) / (q * gp);
      if (fx == 0) break;
      if (t.c > 0)
        acc += fx;
      else
        acc -= fx;
      err += 1;
      gp *= spec.g;
    }
    err += 2;
    mpz_fdiv_r_2exp(acc.get_mpz_t(), acc.get_mpz_t(), kAccBits);
  }
  mpz_class band = err + 1;
  for (long i = 0; i < k; ++i) band *= spec.g;
  mpz_class full = shift_left(mpz_class(1), kAccBits);
  if (band * 4 >= full) return false;
  mpz_class rest = acc;
  std::vector<int> digits;
  for (long i = 0; i < k; ++i) {
    rest *= spec.g;
    mpz_class dig = rest >> static_cast<unsigned long>(kAccBits);
    digits.push_back(static_cast<int>(dig.get_ui()));
    rest -= shift_left(dig, kAccBits);
  }
  if (rest < band || rest > full - band) return false;
  out.insert(out.end(), digits.begin(), digits.end());
  return true;
}

std::vector<int> digits_from_value(const BbpSpec& spec, long d, long k) {
  auto src = bbp_eval(spec);
  auto all = src->digit_vector(spec.g, d + k - 1);
  return std::vector<int>(all.begin() + (d - 1), all.end());
}

}  // namespace

SourcePtr bbp_eval(const BbpSpec& spec) {
  spec.validate();
  if (spec.formula_given) return std::make_shared<BbpValueSource>(spec);
  if (spec.name == "pi2_64" || spec.name == "pi2_81")
    return product_source(pi_source(), pi_source());
  if (spec.name == "log2sq_64") {
    auto l = bbp_eval(bbp_spec("log2_base2"));
    return product_source(l, l);
  }
  if (spec.name == "zeta3_4096") return zeta3_source();
  throw std::invalid_argument("no registered value for spec: " + spec.name);
}

std::vector<int> bbp_extract_digits(const BbpSpec& spec, long d, long k) {
  spec.validate();
  if (!spec.formula_given)
    throw std::invalid_argument("digit extraction needs a term-level formula (" +
                                spec.name + ": " + spec.note + ")");
  if (d < 1) throw std::invalid_argument("digit position must be >= 1");
  if (k < 0) throw std::invalid_argument("digit count must be >= 0");
  if (k == 0) return {};

  double lg = std::log2(static_cast<double>(spec.g));
  long chunk = std::max(1L, static_cast<long>(std::floor(88.0 / lg)));
  std::vector<int> out;
  out.reserve(k);
  bool audited = true;
  for (long pos = d; pos < d + k && audited;) {
    long take = std::min(chunk, d + k - pos);
    audited = extract_chunk(spec, pos, take, out);
    pos += take;
  }
  if (!audited) out = digits_from_value(spec, d, k);
  if (d + k <= 200) {
    auto check = digits_from_value(spec, d, k);
    if (check != out)
      throw std::logic_error("digit extraction disagrees with the certified value");
  }
  return out;
}

std::vector<mpq_class> hypothesis_a_orbit(const BbpSpec& spec, long n_max) {
  spec.validate();
  if (!spec.formula_given)
    throw std::invalid_argument("orbit needs a term-level formula (" + spec.name +
                                ")");
  if (n_max < 1) throw std::invalid_argument("orbit length must be >= 1");
  long lgc = static_cast<long>(std::ceil(std::log2(static_cast<double>(spec.g))));
  // never below the reporting width, or the final truncation would be empty
  long prec = std::max(n_max * lgc + 96, kAccBits);
  std::vector<mpz_class> shifted_c;
  for (const auto& t : spec.terms)
    shifted_c.push_back(shift_left(mpz_class(t.c), prec));

  std::vector<mpq_class> out;
  out.reserve(n_max + 1);
  out.emplace_back(0);
  mpz_class y = 0;
  mpz_class one128 = shift_left(mpz_class(1), kAccBits);
  for (long n = 1; n <= n_max; ++n) {
    y *= spec.g;
    for (std::size_t j = 0; j < spec.terms.size(); ++j)
      y += fdiv(shifted_c[j], mpz_class(spec.terms[j].k) * n + spec.terms[j].m);
    mpz_fdiv_r_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    mpz_class t128 = y >> static_cast<unsigned long>(prec - kAccBits);
    mpq_class v(t128, one128);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

mpq_class star_discrepancy(const std::vector<mpq_class>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const auto& x : points)
    if (x < 0 || x >= 1) throw std::invalid_argument("point outside [0, 1)");
  std::vector<mpq_class> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  long n = static_cast<long>(sorted.size());
  mpq_class best = 0;
  for (long i = 1; i <= n; ++i) {
    mpq_class up = mpq_class(i, n) - sorted[i - 1];
    mpq_class down = sorted[i - 1] - mpq_class(i - 1, n);
    if (up > best) best = up;
    if (down > best) best = down;
  }
  best.canonicalize();
  return best;
}

bool verify_orbit_tail(const BbpSpec& spec, long n_max) {
  spec.validate();
  if (!spec.formula_given)
    throw std::invalid_argument("orbit check needs a term-level formula");
  long lgc = static_cast<long>(std::ceil(std::log2(static_cast<double>(spec.g))));
  long bits = n_max * lgc + 200;
  auto src = bbp_eval(spec);
  Enclosure e = src->enclose(bits);
  mpq_class mid = (e.lower() + e.upper()) / 2;
  mpq_class slack(mpz_class(1), shift_left(mpz_class(1), 80));

  long prec = n_max * lgc + 96;
  std::vector<mpz_class> shifted_c;
  for (const auto& t : spec.terms)
    shifted_c.push_back(shift_left(mpz_class(t.c), prec));
  mpz_class y = 0;
  mpz_class two_prec = shift_left(mpz_class(1), prec);
  mpq_class gpow = 1;

  constexpr long kTailTerms = 140;
  for (long n = 1; n <= n_max; ++n) {
    y *= spec.g;
    for (std::size_t j = 0; j < spec.terms.size(); ++j)
      y += fdiv(shifted_c[j], mpz_class(spec.terms[j].k) * n + spec.terms[j].m);
    mpz_fdiv_r_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    mpq_class yq(y, two_prec);
    yq.canonicalize();

    gpow *= spec.g;
    mpq_class scaled = mid * gpow;
    mpz_class ip = fdiv(scaled.get_num(), scaled.get_den());
    mpq_class frac = scaled - mpq_class(ip);

    mpq_class delta = frac - yq;
    if (delta < 0) delta = -delta;
    mpq_class wrap = 1 - delta;
    mpq_class dist = std::min(delta, wrap);

    mpq_class tail = 0;
    mpq_class gshift(1, spec.g);
    for (long m = n + 1; m <= n + kTailTerms; ++m) {
      mpq_class t = bbp_term_value(spec, m);
      if (t < 0) t = -t;
      tail += t * gshift;
      gshift /= spec.g;
    }
    mpq_class cap = 0;
    for (const auto& t : spec.terms) {
      mpq_class part(mpz_class(std::abs(t.c)),
                     mpz_class(t.k) * (n + kTailTerms + 1) + t.m);
      part.canonicalize();
      cap += part;
    }
    tail += cap * gshift * spec.g * mpq_class(spec.g, spec.g - 1);
    if (dist > tail + slack) return false;
  }
  return true;
}

BbpSpec bbp_spec_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BbpSpec s;
  s.name = j.value("name", "custom");
  s.g = j.at("g").get<int>();
  for (const auto& t : j.at("terms"))
    s.terms.push_back(
        {t.at("c").get<long>(), t.at("k").get<long>(), t.at("m").get<long>()});
  s.formula_given = !s.terms.empty();
  s.validate();
  return s;
}

std::string bbp_spec_to_json(const BbpSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["g"] = spec.g;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : spec.terms)
    j["terms"].push_back({{"c", t.c}, {"k", t.k}, {"m", t.m}});
  return j.dump();
}

}  // namespace wordnum
