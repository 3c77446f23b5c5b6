#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wordnum {

using Symbol = int;

// Ordered set of distinct display glyphs; symbol i renders as glyph(i).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> glyphs);

  static Alphabet binary();            // {"0","1"}
  static Alphabet ab();                // {"a","b"}
  static Alphabet base_digits(int g);  // 0..9, A..Z for g <= 36, else decimal

  int size() const { return static_cast<int>(glyphs_.size()); }
  const std::string& glyph(Symbol s) const { return glyphs_.at(s); }
  Symbol index_of(std::string_view glyph) const;
  bool contains(std::string_view glyph) const;
  bool single_char() const;

  bool operator==(const Alphabet& o) const { return glyphs_ == o.glyphs_; }
  const std::vector<std::string>& glyphs() const { return glyphs_; }

 private:
  std::vector<std::string> glyphs_;
  std::map<std::string, Symbol, std::less<>> index_;
};

class Word {
 public:
  Word() = default;
  Word(Alphabet alphabet, std::vector<Symbol> symbols);

  // Single-char alphabets parse per character; otherwise whitespace-split.
  static Word parse(const Alphabet& alphabet, std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const Alphabet& alphabet() const { return alphabet_; }

  std::string str() const;

  bool operator==(const Word& o) const;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

// Concatenation; the empty word is a two-sided identity regardless of its
// (possibly default) alphabet.
Word concat(const Word& u, const Word& v);

class Morphism {
 public:
  Morphism(Alphabet src, Alphabet dst, std::vector<std::vector<Symbol>> images);

  static Morphism parse(const Alphabet& src, const Alphabet& dst,
                        const std::map<std::string, std::string>& images);

  const Alphabet& source() const { return src_; }
  const Alphabet& target() const { return dst_; }
  const std::vector<Symbol>& image(Symbol s) const { return images_.at(s); }
  bool uniform() const;
  bool endomorphism() const { return src_ == dst_; }

  Word apply(const Word& w) const;
  void append_image(std::vector<Symbol>& out, Symbol s) const;

  nlohmann::json to_json() const;
  static Morphism from_json(const nlohmann::json& j);

 private:
  Alphabet src_;
  Alphabet dst_;
  std::vector<std::vector<Symbol>> images_;
};

// Lazily extensible infinite word. prefix(n) is deterministic and monotone:
// prefix(n) is a prefix of prefix(m) for n <= m. Extension is single-consumer;
// reads of already materialized symbols are safe.
class WordStream {
 public:
  virtual ~WordStream() = default;

  const Alphabet& alphabet() const { return alphabet_; }
  Word prefix(std::size_t n);
  Symbol at(std::size_t i);
  // Materializes at least n symbols and exposes the internal buffer.
  const std::vector<Symbol>& buffer(std::size_t n);

 protected:
  explicit WordStream(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  // Appends symbols to buf until buf.size() >= need.
  virtual void extend(std::vector<Symbol>& buf, std::size_t need) = 0;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> buf_;
};

using StreamPtr = std::shared_ptr<WordStream>;

// Stream whose position n is fn(n).
StreamPtr function_stream(Alphabet alphabet,
                          std::function<Symbol(std::size_t)> fn);

// Fixed point of mu from letter a; requires mu(a) = a*u with u nonempty and
// every mu^k(u) nonempty (decided exactly via letter mortality).
StreamPtr fixed_point(const Morphism& mu, Symbol a);

// phi applied blockwise to the fixed point of sigma from a.
StreamPtr morphic_image(const Morphism& sigma, Symbol a, const Morphism& phi);

// Named morphisms: fib, ptm, eta, rs_sigma, rs_phi.
Morphism named_morphism(const std::string& name);

}  // namespace wordnum
