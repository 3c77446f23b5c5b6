#include "wordnum/words.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wordnum {

Alphabet::Alphabet(std::vector<std::string> glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  for (int i = 0; i < static_cast<int>(glyphs_.size()); ++i) {
    if (glyphs_[i].empty())
      throw std::invalid_argument("alphabet glyph must be nonempty");
    if (!index_.emplace(glyphs_[i], i).second)
      throw std::invalid_argument("duplicate alphabet glyph: " + glyphs_[i]);
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

Alphabet Alphabet::ab() { return Alphabet({"a", "b"}); }

Alphabet Alphabet::base_digits(int g) {
  if (g < 1) throw std::invalid_argument("base must be >= 1");
  std::vector<std::string> glyphs;
  glyphs.reserve(g);
  static const char* kDigits = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  for (int i = 0; i < g; ++i) {
    if (g <= 36)
      glyphs.emplace_back(1, kDigits[i]);
    else
      glyphs.push_back(std::to_string(i));
  }
  return Alphabet(std::move(glyphs));
}

Symbol Alphabet::index_of(std::string_view glyph) const {
  auto it = index_.find(glyph);
  if (it == index_.end())
    throw std::invalid_argument("glyph not in alphabet: " + std::string(glyph));
  return it->second;
}

bool Alphabet::contains(std::string_view glyph) const {
  return index_.find(glyph) != index_.end();
}

bool Alphabet::single_char() const {
  return std::all_of(glyphs_.begin(), glyphs_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_)
    if (s < 0 || s >= alphabet_.size())
      throw std::invalid_argument("symbol outside alphabet");
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
  std::vector<Symbol> syms;
  if (alphabet.single_char()) {
    syms.reserve(text.size());
    for (char c : text) syms.push_back(alphabet.index_of(std::string_view(&c, 1)));
  } else {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) syms.push_back(alphabet.index_of(tok));
  }
  return Word(alphabet, std::move(syms));
}

std::string Word::str() const {
  std::string out;
  bool join = !alphabet_.single_char();
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (join && i) out += ' ';
    out += alphabet_.glyph(symbols_[i]);
  }
  return out;
}

bool Word::operator==(const Word& o) const {
  if (empty() && o.empty()) return true;
  return alphabet_ == o.alphabet_ && symbols_ == o.symbols_;
}

Word concat(const Word& u, const Word& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (!(u.alphabet() == v.alphabet()))
    throw std::invalid_argument("concat: alphabet mismatch");
  std::vector<Symbol> syms = u.symbols();
  syms.insert(syms.end(), v.symbols().begin(), v.symbols().end());
  return Word(u.alphabet(), std::move(syms));
}

Morphism::Morphism(Alphabet src, Alphabet dst,
                   std::vector<std::vector<Symbol>> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_.size())
    throw std::invalid_argument("morphism must map every source letter");
  for (const auto& img : images_)
    for (Symbol s : img)
      if (s < 0 || s >= dst_.size())
        throw std::invalid_argument("morphism image symbol outside target");
}

Morphism Morphism::parse(const Alphabet& src, const Alphabet& dst,
                         const std::map<std::string, std::string>& images) {
  if (images.size() != static_cast<std::size_t>(src.size()))
    throw std::invalid_argument("morphism must map every source letter");
  std::vector<std::vector<Symbol>> imgs(src.size());
  for (const auto& [letter, image] : images)
    imgs.at(src.index_of(letter)) = Word::parse(dst, image).symbols();
  return Morphism(src, dst, std::move(imgs));
}

bool Morphism::uniform() const {
  for (const auto& img : images_)
    if (img.size() != images_.front().size()) return false;
  return true;
}

Word Morphism::apply(const Word& w) const {
  if (!w.empty() && !(w.alphabet() == src_))
    throw std::invalid_argument("apply: word not over source alphabet");
  std::vector<Symbol> out;
  for (Symbol s : w.symbols()) append_image(out, s);
  return Word(dst_, std::move(out));
}

void Morphism::append_image(std::vector<Symbol>& out, Symbol s) const {
  const auto& img = images_.at(s);
  out.insert(out.end(), img.begin(), img.end());
}

nlohmann::json Morphism::to_json() const {
  nlohmann::json j;
  j["src"] = src_.glyphs();
  j["dst"] = dst_.glyphs();
  nlohmann::json map = nlohmann::json::object();
  for (int s = 0; s < src_.size(); ++s)
    map[src_.glyph(s)] = Word(dst_, images_[s]).str();
  j["map"] = std::move(map);
  return j;
}

Morphism Morphism::from_json(const nlohmann::json& j) {
  Alphabet src(j.at("src").get<std::vector<std::string>>());
  Alphabet dst(j.at("dst").get<std::vector<std::string>>());
  std::map<std::string, std::string> images;
  for (const auto& [k, v] : j.at("map").items())
    images[k] = v.get<std::string>();
  return Morphism::parse(src, dst, images);
}

Word WordStream::prefix(std::size_t n) {
  const auto& buf = buffer(n);
  return Word(alphabet_,
              std::vector<Symbol>(buf.begin(), buf.begin() + n));
}

Symbol WordStream::at(std::size_t i) { return buffer(i + 1)[i]; }

const std::vector<Symbol>& WordStream::buffer(std::size_t n) {
  if (buf_.size() < n) {
    extend(buf_, n);
    if (buf_.size() < n)
      throw std::logic_error("word stream failed to extend");
  }
  return buf_;
}

namespace {

class FunctionStream final : public WordStream {
 public:
  FunctionStream(Alphabet a, std::function<Symbol(std::size_t)> fn)
      : WordStream(std::move(a)), fn_(std::move(fn)) {}

 private:
  void extend(std::vector<Symbol>& buf, std::size_t need) override {
    while (buf.size() < need) buf.push_back(fn_(buf.size()));
  }
  std::function<Symbol(std::size_t)> fn_;
};

class FixedPointStream final : public WordStream {
 public:
  FixedPointStream(Morphism mu, Symbol a)
      : WordStream(mu.source()), mu_(std::move(mu)), seed_(a) {}

 private:
  void extend(std::vector<Symbol>& buf, std::size_t need) override {
    if (buf.empty()) buf.push_back(seed_);
    // buf[next_] is the next letter whose image replaces it in the limit;
    // since mu(seed) starts with seed, appending image tails preserves the
    // already materialized prefix.
    while (buf.size() < need) {
      Symbol s = buf[next_];
      const auto& img = mu_.image(s);
      if (next_ == 0) {
        buf.insert(buf.end(), img.begin() + 1, img.end());
      } else {
        buf.insert(buf.end(), img.begin(), img.end());
      }
      ++next_;
    }
  }

  Morphism mu_;
  Symbol seed_;
  std::size_t next_ = 0;
};

class MorphicImageStream final : public WordStream {
 public:
  MorphicImageStream(StreamPtr inner, Morphism phi)
      : WordStream(phi.target()), inner_(std::move(inner)), phi_(std::move(phi)) {}

 private:
  void extend(std::vector<Symbol>& buf, std::size_t need) override {
    std::size_t stall = 0;
    while (buf.size() < need) {
      std::size_t before = buf.size();
      phi_.append_image(buf, inner_->at(consumed_++));
      stall = buf.size() == before ? stall + 1 : 0;
      if (stall > 1u << 20)
        throw std::invalid_argument(
            "morphic image produces no output (all images empty)");
    }
  }

  StreamPtr inner_;
  Morphism phi_;
  std::size_t consumed_ = 0;
};

// Letters whose iterated image eventually vanishes. A letter is mortal iff
// its image consists only of mortal letters; the fixpoint stabilizes within
// |alphabet| rounds.
std::vector<bool> mortal_letters(const Morphism& mu) {
  int n = mu.source().size();
  std::vector<bool> mortal(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Symbol s = 0; s < n; ++s) {
      if (mortal[s]) continue;
      bool all = true;
      for (Symbol t : mu.image(s))
        if (!mortal[t]) { all = false; break; }
      if (all) { mortal[s] = true; changed = true; }
    }
  }
  return mortal;
}

}  // namespace

StreamPtr function_stream(Alphabet alphabet,
                          std::function<Symbol(std::size_t)> fn) {
  return std::make_shared<FunctionStream>(std::move(alphabet), std::move(fn));
}

StreamPtr fixed_point(const Morphism& mu, Symbol a) {
  if (!mu.endomorphism())
    throw std::invalid_argument("fixed point requires an endomorphism");
  const auto& img = mu.image(a);
  if (img.size() < 2 || img[0] != a)
    throw std::invalid_argument(
        "fixed point requires mu(a) = a*u with u nonempty");
  auto mortal = mortal_letters(mu);
  bool immortal_tail = false;
  for (std::size_t i = 1; i < img.size(); ++i)
    if (!mortal[img[i]]) immortal_tail = true;
  if (!immortal_tail)
    throw std::invalid_argument(
        "fixed point requires some power of the image tail to stay nonempty");
  return std::make_shared<FixedPointStream>(mu, a);
}

StreamPtr morphic_image(const Morphism& sigma, Symbol a, const Morphism& phi) {
  if (!(phi.source() == sigma.source()))
    throw std::invalid_argument("morphic image: phi must map sigma's alphabet");
  return std::make_shared<MorphicImageStream>(fixed_point(sigma, a), phi);
}

Morphism named_morphism(const std::string& name) {
  if (name == "fib")
    return Morphism::parse(Alphabet::ab(), Alphabet::ab(),
                           {{"a", "ab"}, {"b", "a"}});
  if (name == "ptm")
    return Morphism::parse(Alphabet::ab(), Alphabet::ab(),
                           {{"a", "ab"}, {"b", "ba"}});
  if (name == "eta") {
    Alphabet tri({"0", "1", "2"});
    return Morphism::parse(tri, tri, {{"0", "012"}, {"1", "12"}, {"2", "2"}});
  }
  if (name == "rs_sigma") {
    Alphabet four({"1", "2", "3", "4"});
    return Morphism::parse(
        four, four, {{"1", "12"}, {"2", "13"}, {"3", "42"}, {"4", "43"}});
  }
  if (name == "rs_phi") {
    Alphabet four({"1", "2", "3", "4"});
    return Morphism::parse(
        four, Alphabet::ab(),
        {{"1", "aa"}, {"2", "ab"}, {"3", "ba"}, {"4", "bb"}});
  }
  throw std::invalid_argument("unknown morphism: " + name);
}

}  // namespace wordnum
