#include <doctest.h>

#include <map>
#include <string>

#include "wordnum/fibonacci.hpp"
#include "wordnum/words.hpp"

using namespace wordnum;

TEST_SUITE("words") {

TEST_CASE("alphabet indexing and glyphs") {
  Alphabet ab = Alphabet::ab();
  CHECK(ab.size() == 2);
  CHECK(ab.glyph(0) == "a");
  CHECK(ab.index_of("b") == 1);
  CHECK(ab.contains("a"));
  CHECK(!ab.contains("c"));
  CHECK_THROWS_AS(Alphabet({"x", "x"}), std::invalid_argument);

  Alphabet hex = Alphabet::base_digits(16);
  CHECK(hex.size() == 16);
  CHECK(hex.glyph(15) == "F");
  Alphabet big = Alphabet::base_digits(40);
  CHECK(big.glyph(39) == "39");
  CHECK(!big.single_char());
}

TEST_CASE("word parse and render") {
  Word w = Word::parse(Alphabet::ab(), "abaab");
  CHECK(w.size() == 5);
  CHECK(w.str() == "abaab");
  CHECK(w[0] == 0);
  CHECK(w[2] == 0);
  Word e = Word::parse(Alphabet::ab(), "");
  CHECK(e.empty());
  CHECK_THROWS_AS(Word::parse(Alphabet::ab(), "abc"), std::invalid_argument);
}

TEST_CASE("concat identity and lengths") {
  Alphabet ab = Alphabet::ab();
  Word e;
  Word u = Word::parse(ab, "ab");
  CHECK(concat(e, u) == u);
  CHECK(concat(u, e) == u);
  Word f4 = Word::parse(ab, "aba");
  Word f3 = Word::parse(ab, "ab");
  CHECK(concat(f4, f3).str() == "abaab");
  Alphabet bin = Alphabet::binary();
  CHECK(concat(Word::parse(bin, "01"), Word::parse(bin, "10")).str() == "0110");
  CHECK(concat(u, f4).size() == u.size() + f4.size());
  CHECK_THROWS_AS(concat(u, Word::parse(bin, "01")), std::invalid_argument);
}

TEST_CASE("morphism application") {
  Morphism fib = named_morphism("fib");
  CHECK(fib.apply(Word::parse(Alphabet::ab(), "aba")).str() == "abaab");
  Morphism ptm = named_morphism("ptm");
  CHECK(ptm.apply(Word::parse(Alphabet::ab(), "ab")).str() == "abba");
  CHECK(ptm.apply(Word()).empty());
  CHECK(ptm.uniform());
  CHECK(!fib.uniform());
  CHECK(fib.endomorphism());
}

TEST_CASE("fixed point golden prefixes") {
  Morphism fib = named_morphism("fib");
  auto w = fixed_point(fib, fib.source().index_of("a"));
  CHECK(w->prefix(34).str() == "abaababaabaababaababaabaababaabaab");

  Morphism ptm = named_morphism("ptm");
  auto t = fixed_point(ptm, ptm.source().index_of("a"));
  CHECK(t->prefix(17).str() == "abbabaabbaababbab");

  Morphism eta = named_morphism("eta");
  auto u = fixed_point(eta, eta.source().index_of("0"));
  CHECK(u->prefix(10).str() == "0121221222");
}

TEST_CASE("fixed point rejects bad seeds") {
  Alphabet ab = Alphabet::ab();
  // mu(a) does not start with a
  Morphism m1 = Morphism::parse(ab, ab, {{"a", "ba"}, {"b", "a"}});
  CHECK_THROWS_AS(fixed_point(m1, 0), std::invalid_argument);
  // mu(a) = a alone never grows
  Morphism m2 = Morphism::parse(ab, ab, {{"a", "a"}, {"b", "b"}});
  CHECK_THROWS_AS(fixed_point(m2, 0), std::invalid_argument);
  // tail u = b is mortal: mu(b) = e
  Morphism m3 = Morphism::parse(ab, ab, {{"a", "ab"}, {"b", ""}});
  CHECK_THROWS_AS(fixed_point(m3, 0), std::invalid_argument);
}

TEST_CASE("fibonacci finite words by recurrence") {
  Alphabet ab = Alphabet::ab();
  Morphism mu = named_morphism("fib");
  auto w = fixed_point(mu, 0);
  // f_1 = b, f_2 = a, f_n = f_{n-1} f_{n-2}; prefix(F_n) = f_n for n >= 2
  Word fn_1 = Word::parse(ab, "b");
  Word fn = Word::parse(ab, "a");
  for (int n = 3; n <= 20; ++n) {
    Word next = concat(fn, fn_1);
    fn_1 = fn;
    fn = next;
    CHECK(w->prefix(fn.size()) == fn);
    // letter counts: F_{n-1} letters a, F_{n-2} letters b
    std::size_t a_count = 0;
    for (std::size_t i = 0; i < fn.size(); ++i)
      if (fn[i] == 0) ++a_count;
    CHECK(a_count == fib(n - 1).get_ui());
    CHECK(fn.size() - a_count == fib(n - 2).get_ui());
    // the morphism maps f_{n-1} to f_n
    CHECK(mu.apply(fn_1) == fn);
  }
}

TEST_CASE("fixed point commutes with its morphism") {
  Morphism fib = named_morphism("fib");
  auto w = fixed_point(fib, 0);
  for (std::size_t n : {1, 10, 100, 1000, 10000}) {
    Word image = fib.apply(w->prefix(n));
    CHECK(w->prefix(image.size()) == image);
  }
}

TEST_CASE("prefix determinism and monotonicity") {
  auto w = fixed_point(named_morphism("ptm"), 0);
  CHECK(w->prefix(0).empty());
  Word p5 = w->prefix(5);
  Word p12 = w->prefix(12);
  CHECK(w->prefix(5) == p5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(p12[i] == p5[i]);
  CHECK(w->at(3) == p12[3]);
}

TEST_CASE("morphic image golden prefix") {
  Morphism sigma = named_morphism("rs_sigma");
  Morphism phi = named_morphism("rs_phi");
  auto w = morphic_image(sigma, sigma.source().index_of("1"), phi);
  CHECK(w->prefix(16).str() == "aaabaabaaaabbbab");
  // underlying fixed point
  auto u = fixed_point(sigma, sigma.source().index_of("1"));
  CHECK(u->prefix(12).str() == "121312421213");
}

TEST_CASE("morphic image with identity equals fixed point") {
  Alphabet ab = Alphabet::ab();
  Morphism fib = named_morphism("fib");
  Morphism id = Morphism::parse(ab, ab, {{"a", "a"}, {"b", "b"}});
  auto direct = fixed_point(fib, 0);
  auto image = morphic_image(fib, 0, id);
  CHECK(image->prefix(500) == direct->prefix(500));
}

TEST_CASE("uniform morphic image length scaling") {
  Morphism sigma = named_morphism("rs_sigma");
  Morphism phi = named_morphism("rs_phi");
  REQUIRE(sigma.uniform());
  REQUIRE(phi.uniform());
  auto u = fixed_point(sigma, 0);
  auto w = morphic_image(sigma, 0, phi);
  // phi is 2-uniform: image of a length-n prefix has length 2n
  Word img = phi.apply(u->prefix(100));
  CHECK(img.size() == 200);
  CHECK(w->prefix(200) == img);
}

TEST_CASE("function stream") {
  auto w = function_stream(Alphabet::binary(),
                           [](std::size_t i) { return int(i % 2); });
  CHECK(w->prefix(6).str() == "010101");
}

TEST_CASE("morphism json round trip") {
  Morphism fib = named_morphism("fib");
  nlohmann::json j = fib.to_json();
  CHECK(j["map"]["a"] == "ab");
  Morphism back = Morphism::from_json(j);
  CHECK(back.apply(Word::parse(Alphabet::ab(), "aba")).str() == "abaab");
  CHECK(back.source() == fib.source());
}

TEST_CASE("unknown morphism name") {
  CHECK_THROWS_AS(named_morphism("nope"), std::invalid_argument);
}

}  // TEST_SUITE
