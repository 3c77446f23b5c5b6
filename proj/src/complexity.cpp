#include "wordnum/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

#include "wordnum/reals.hpp"

namespace wordnum {

namespace {

constexpr std::uint64_t kHashBase = 1099511628211ull;

// Distinct length-m factors of symbols[0..n), with positions of first
// occurrences. Rolling hash with verification re-scan on bucket collision,
// so the count is exact regardless of hash quality.
std::vector<std::uint32_t> distinct_factor_positions(
    const std::vector<Symbol>& s, std::size_t m) {
  std::vector<std::uint32_t> firsts;
  if (m == 0 || s.size() < m) return firsts;
  std::uint64_t pow_m = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) pow_m *= kHashBase;
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < m; ++i)
    h = h * kHashBase + static_cast<std::uint64_t>(s[i]) + 1;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  buckets.reserve(s.size());
  auto visit = [&](std::size_t i, std::uint64_t hash) {
    auto& bucket = buckets[hash];
    for (std::uint32_t j : bucket)
      if (std::memcmp(s.data() + i, s.data() + j, m * sizeof(Symbol)) == 0)
        return;
    bucket.push_back(static_cast<std::uint32_t>(i));
    firsts.push_back(static_cast<std::uint32_t>(i));
  };
  visit(0, h);
  for (std::size_t i = 1; i + m <= s.size(); ++i) {
    h = (h - (static_cast<std::uint64_t>(s[i - 1]) + 1) * pow_m) * kHashBase +
        static_cast<std::uint64_t>(s[i + m - 1]) + 1;
    visit(i, h);
  }
  return firsts;
}

}  // namespace

ComplexityProfile complexity(const std::vector<Symbol>& symbols,
                             std::size_t max_m) {
  if (max_m > symbols.size())
    throw std::invalid_argument("complexity: max_m exceeds horizon");
  ComplexityProfile prof;
  prof.horizon = symbols.size();
  prof.p.reserve(max_m);
  for (std::size_t m = 1; m <= max_m; ++m)
    prof.p.push_back(distinct_factor_positions(symbols, m).size());
  return prof;
}

ComplexityProfile complexity(WordStream& w, std::size_t max_m,
                             std::size_t horizon) {
  const auto& buf = w.buffer(horizon);
  std::vector<Symbol> prefix(buf.begin(), buf.begin() + horizon);
  return complexity(prefix, max_m);
}

SturmianReport is_sturmian_up_to(WordStream& w, std::size_t max_m,
                                 std::size_t horizon) {
  if (w.alphabet().size() != 2)
    throw std::invalid_argument("sturmian check requires a binary alphabet");
  const auto& buf = w.buffer(horizon);
  std::vector<Symbol> s(buf.begin(), buf.begin() + horizon);

  SturmianReport rep;
  rep.profile.horizon = horizon;
  rep.sturmian = true;
  for (std::size_t m = 1; m <= max_m; ++m) {
    auto firsts = distinct_factor_positions(s, m);
    rep.profile.p.push_back(firsts.size());
    // Right extensions: a factor is right-special when both continuations
    // occur within the horizon.
    std::vector<std::uint32_t> specials;
    for (std::uint32_t pos : firsts) {
      bool ext[2] = {false, false};
      for (std::size_t i = 0; i + m < s.size(); ++i) {
        if (std::memcmp(s.data() + i, s.data() + pos, m * sizeof(Symbol)) == 0)
          ext[s[i + m]] = true;
        if (ext[0] && ext[1]) break;
      }
      if (ext[0] && ext[1]) specials.push_back(pos);
    }
    if (specials.size() == 1) {
      rep.right_special.emplace_back(
          Word(w.alphabet(), std::vector<Symbol>(s.begin() + specials[0],
                                                 s.begin() + specials[0] + m)));
    } else {
      rep.right_special.emplace_back(std::nullopt);
    }
    if (rep.profile.p.back() != m + 1 || specials.size() != 1)
      rep.sturmian = false;
  }
  return rep;
}

std::vector<double> letter_frequency(WordStream& w, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("letter_frequency: empty horizon");
  const auto& buf = w.buffer(horizon);
  std::vector<double> freq(w.alphabet().size(), 0.0);
  for (std::size_t i = 0; i < horizon; ++i) freq[buf[i]] += 1.0;
  for (double& f : freq) f /= static_cast<double>(horizon);
  return freq;
}

namespace {

void periodic_hits(const std::vector<Symbol>& s, const PatternQuery& q,
                   std::vector<PatternHit>& hits) {
  std::size_t n = s.size();
  long iw = q.w_num / q.w_den;
  long rem = q.w_num % q.w_den;
  if (q.kind == PatternKind::w_power &&
      (q.w_den <= 0 || q.w_num <= q.w_den))
    throw std::invalid_argument("w-power exponent must be rational > 1");
  for (std::size_t p = 1; 2 * p <= n && hits.size() < q.max_hits; ++p) {
    std::size_t total;
    switch (q.kind) {
      case PatternKind::square: total = 2 * p; break;
      case PatternKind::overlap: total = 2 * p + 1; break;
      default:
        total = static_cast<std::size_t>(iw) * p +
                (static_cast<std::size_t>(rem) * p + q.w_den - 1) / q.w_den;
        break;
    }
    if (total > n || total < q.min_total) continue;
    std::size_t need = total - p;  // matched positions j: s[j] == s[j+p]
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      run = s[j] == s[j + p] ? run + 1 : 0;
      if (run >= need) {
        std::size_t start = j + 1 - need;
        hits.push_back({q.kind, start, p, total});
        if (hits.size() >= q.max_hits) return;
      }
    }
  }
}

void palindrome_hits(const std::vector<Symbol>& s, const PatternQuery& q,
                     std::vector<PatternHit>& hits) {
  std::size_t n = s.size();
  auto expand = [&](std::size_t lo, std::size_t hi) {
    // [lo, hi] inclusive bounds of a seed palindrome (or hi = lo-1 for even).
    while (true) {
      std::size_t len = hi - lo + 1;
      if (len >= q.min_total) {
        hits.push_back({PatternKind::palindrome, lo, 0, len});
        if (hits.size() >= q.max_hits) return;
      }
      if (lo == 0 || hi + 1 >= n || s[lo - 1] != s[hi + 1]) return;
      --lo;
      ++hi;
    }
  };
  for (std::size_t c = 0; c < n && hits.size() < q.max_hits; ++c) {
    expand(c, c);
    if (c + 1 < n && s[c] == s[c + 1]) expand(c, c + 1);
  }
}

}  // namespace

std::vector<PatternHit> find_patterns(const std::vector<Symbol>& symbols,
                                      const PatternQuery& q) {
  std::vector<PatternHit> hits;
  if (q.kind == PatternKind::palindrome)
    palindrome_hits(symbols, q, hits);
  else
    periodic_hits(symbols, q, hits);
  std::sort(hits.begin(), hits.end(), [](const PatternHit& a, const PatternHit& b) {
    return a.start != b.start ? a.start < b.start : a.total_len < b.total_len;
  });
  return hits;
}

std::vector<PatternHit> find_patterns(WordStream& w, const PatternQuery& q,
                                      std::size_t horizon) {
  const auto& buf = w.buffer(horizon);
  std::vector<Symbol> prefix(buf.begin(), buf.begin() + horizon);
  return find_patterns(prefix, q);
}

std::optional<std::size_t> verify_bounded_period(
    const std::vector<Symbol>& s, std::size_t q) {
  if (q == 0 || 2 * q > s.size()) return std::nullopt;
  std::size_t r = 0;
  for (std::size_t i = s.size() - q; i-- > 0;) {
    if (s[i] != s[i + q]) {
      r = i + 1;
      break;
    }
  }
  if (r + 2 * q > s.size()) return std::nullopt;
  return r;
}

GrowthReport complexity_growth_report(RealSource& source, int base,
                                      std::size_t max_m, std::size_t horizon,
                                      double eta) {
  auto digits = source.digit_vector(base, static_cast<long>(horizon));
  std::vector<Symbol> syms(digits.begin(), digits.end());
  auto prof = complexity(syms, max_m);

  GrowthReport rep;
  rep.base = base;
  rep.horizon = horizon;
  rep.eta = eta;
  for (std::size_t m = 1; m <= max_m; ++m) {
    GrowthRow row;
    row.m = m;
    row.p = prof.of(m);
    row.per_m = static_cast<double>(row.p) / static_cast<double>(m);
    if (m > 1)
      row.adjusted = static_cast<double>(row.p) /
                     (static_cast<double>(m) *
                      std::pow(std::log(static_cast<double>(m)), eta));
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace wordnum
