#include <doctest.h>

#include <cmath>
#include <vector>

#include "wordnum/constructions.hpp"
#include "wordnum/reals.hpp"
#include "wordnum/sources.hpp"
#include "wordnum/words.hpp"

using namespace wordnum;

TEST_SUITE("reals") {

TEST_CASE("square root of two digit strings") {
  auto x = sqrt_source(2);
  CHECK(x->integer_part() == 1);
  CHECK(x->digit_string(10, 29) == "41421356237309504880168872420");
  CHECK(x->digit_string(2, 50) ==
        "01101010000010011110011001100111111100111011110011");
}

TEST_CASE("square root rejects perfect squares") {
  CHECK_THROWS_AS(sqrt_source(4), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_source(0), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_source(144), std::invalid_argument);
  CHECK_NOTHROW(sqrt_source(2));
  CHECK_NOTHROW(sqrt_source(999));
}

TEST_CASE("rational source digits") {
  auto x = rational_source(1, 7);
  CHECK(x->digit_string(10, 12) == "142857142857");
  CHECK(x->integer_part() == 0);
  auto y = rational_source(22, 7);
  CHECK(y->integer_part() == 3);
  CHECK_THROWS_AS(rational_source(1, 0), std::invalid_argument);
}

TEST_CASE("digit prefix stability") {
  auto x = sqrt_source(2);
  auto short_digits = x->digit_vector(10, 40);
  auto long_digits = x->digit_vector(10, 200);
  for (int i = 0; i < 40; ++i) CHECK(short_digits[i] == long_digits[i]);
  // a fresh source asked directly for the long prefix agrees
  auto fresh = sqrt_source(2);
  CHECK(fresh->digit_vector(10, 200) == long_digits);
}

TEST_CASE("precision ceiling is reported, not rounded") {
  auto x = sqrt_source(2);
  x->set_max_bits(64);
  CHECK_THROWS_AS(x->digit_vector(10, 100), precision_limit_error);
}

TEST_CASE("enclosure width and containment") {
  auto x = sqrt_source(2);
  for (long bits : {32L, 100L, 333L}) {
    Enclosure e = x->enclose(bits);
    CHECK(e.bits >= bits);
    CHECK(e.hi - e.lo <= 4);
    // lo/2^bits <= sqrt(2) <= hi/2^bits, squared to stay exact
    mpz_class two_shifted = mpz_class(2) << (2 * e.bits);
    CHECK(e.lo * e.lo <= two_shifted);
    CHECK(e.hi * e.hi >= two_shifted);
  }
}

TEST_CASE("rational expansion periods") {
  auto r = rational_expansion(137174210, 1111111111, 10);
  CHECK(r.integer == 0);
  CHECK(r.preperiod.empty());
  CHECK(r.period == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 0});

  auto half = rational_expansion(1, 2, 10);
  CHECK(half.preperiod == std::vector<int>{5});
  CHECK(half.period.empty());

  auto seventh = rational_expansion(1, 7, 10);
  CHECK(seventh.preperiod.empty());
  CHECK(seventh.period == std::vector<int>{1, 4, 2, 8, 5, 7});
}

TEST_CASE("rational expansion round trip") {
  const std::pair<long, long> cases[] = {
      {137174210, 1111111111}, {1, 2}, {1, 7}, {22, 7}, {5, 6}, {100, 3}};
  for (auto [p, q] : cases) {
    auto r = rational_expansion(p, q, 10);
    // integer + preperiod + repeating period, resummed exactly
    mpq_class value(r.integer);
    mpq_class scale(1, 10);
    for (int d : r.preperiod) {
      value += d * scale;
      scale /= 10;
    }
    if (!r.period.empty()) {
      mpz_class num = 0;
      for (int d : r.period) num = num * 10 + d;
      mpz_class den = 0;
      for (std::size_t i = 0; i < r.period.size(); ++i) den = den * 10 + 9;
      value += scale * 10 * mpq_class(num, den);
    }
    value.canonicalize();
    CHECK(value == mpq_class(p, q));
  }
}

TEST_CASE("lacunary power-of-two source") {
  auto x = lacunary_builtin("2^n");
  CHECK(x->digit_string(2, 19) == "1101000100000001000");
  auto digits = x->digit_vector(2, 300);
  for (int i = 1; i <= 300; ++i) {
    bool is_power = i == 1 || i == 2 || i == 4 || i == 8 || i == 16 ||
                    i == 32 || i == 64 || i == 128 || i == 256;
    CHECK(digits[i - 1] == (is_power ? 1 : 0));
  }
}

TEST_CASE("lacunary ones counts") {
  auto x = lacunary_builtin("2^n");
  CHECK(ones_count(*x, 19) == 5);
  CHECK(ones_count(*x, 0) == 0);
  CHECK(ones_count(*x, 2) == 2);
  auto f = lacunary_builtin("n!");
  CHECK(ones_count(*f, 6) == 3);  // exponents 1, 2, 6
  auto fib_src = lacunary_builtin("fib");
  // exponents 1, 2, 3, 5, 8, 13, 21
  CHECK(ones_count(*fib_src, 21) == 7);
  CHECK(ones_count(*fib_src, 20) == 6);
}

TEST_CASE("lacunary sources count ones exactly at exponents") {
  for (const char* family : {"2^n", "n!", "fib"}) {
    auto x = lacunary_builtin(family);
    auto digits = x->digit_vector(2, 200);
    long count = 0;
    for (int d : digits) count += d;
    CHECK(count == ones_count(*x, 200));
  }
  CHECK_THROWS_AS(lacunary_builtin("nope"), std::invalid_argument);
}

TEST_CASE("lacunary exponents must increase strictly") {
  CHECK_THROWS_AS(
      lacunary_source(2, "bad", [](int) { return mpz_class(3); })
          ->digit_vector(2, 10),
      std::logic_error);
}

TEST_CASE("composed sources agree on dual routes") {
  // (sqrt(2) + sqrt(3))^2 = 5 + 2 sqrt(6)
  auto sum = sum_source(sqrt_source(2), sqrt_source(3));
  auto left = product_source(sum, sum);
  auto right = sum_source(rational_source(5, 1),
                          scaled_source(2, sqrt_source(6)));
  CHECK(left->digit_string(10, 100) == right->digit_string(10, 100));
  CHECK(left->integer_part() == 9);

  // sqrt(2) * sqrt(3) = sqrt(6)
  auto prod = product_source(sqrt_source(2), sqrt_source(3));
  CHECK(prod->digit_string(10, 150) == sqrt_source(6)->digit_string(10, 150));

  // 5 * sqrt(2) = sqrt(50)
  auto scaled = scaled_source(5, sqrt_source(2));
  CHECK(scaled->digit_string(10, 150) == sqrt_source(50)->digit_string(10, 150));

  // 1/sqrt(2) + 1/sqrt(2) = sqrt(2)
  auto rec = reciprocal_source(sqrt_source(2));
  auto doubled = sum_source(rec, reciprocal_source(sqrt_source(2)));
  CHECK(doubled->digit_string(10, 150) ==
        sqrt_source(2)->digit_string(10, 150));

  // (sqrt(3) + sqrt(2)) - sqrt(2) = sqrt(3)
  auto diff = difference_source(sum, sqrt_source(2));
  CHECK(diff->digit_string(10, 150) == sqrt_source(3)->digit_string(10, 150));
}

TEST_CASE("independent constants") {
  auto pi = pi_source();
  CHECK(pi->integer_part() == 3);
  CHECK(pi->digit_string(10, 40) ==
        "1415926535897932384626433832795028841971");
  auto z3 = zeta3_source();
  CHECK(z3->integer_part() == 1);
  CHECK(z3->digit_string(10, 30) == "202056903159594285399738161511");
}

TEST_CASE("ones-count inequalities for two quadratic irrationals") {
  auto rep = check_b_inequalities(sqrt_source(2), sqrt_source(3), 2000);
  CHECK(rep.n_max == 2000);
  CHECK(rep.sum_constant == 1);
  CHECK(rep.product_log_arg == 4);   // floor(sqrt2 + sqrt3 + 1)
  CHECK(rep.reciprocal_shift == 1);  // floor(log2(sqrt2 + 1/sqrt2 + 1))
  for (int i = 0; i < 3; ++i) {
    CHECK(rep.violations[i] == 0);
    CHECK(rep.threshold[i] == 1);
  }
}

TEST_CASE("ones count grows at least like sqrt n") {
  auto probe = b_growth_probe(*sqrt_source(2), 10000);
  CHECK(probe.n0 == 2);
  CHECK(probe.c == doctest::Approx(0.7071067811865475).epsilon(1e-12));
  CHECK(probe.c > 0);
}

TEST_CASE("block statistics of a digit-concatenation normal number") {
  auto c = champernowne(2);
  auto st = normality_stats(*c, 2, 1, 1000000);
  CHECK(st.base == 2);
  CHECK(st.horizon == 1000000);
  CHECK(st.max_deviation == doctest::Approx(0.030199).epsilon(1e-4));
  CHECK(!st.consistent);  // 0.01 default threshold is tighter than reality here
  CHECK(!st.horizon_warning);
  auto relaxed = normality_stats(*c, 2, 1, 1000000, 0.05);
  CHECK(relaxed.consistent);
}

TEST_CASE("block statistics of a sparse source") {
  auto x = lacunary_builtin("2^n");
  auto st = normality_stats(*x, 2, 1, 100000);
  CHECK(st.max_deviation > 0.49);
  CHECK(!st.consistent);
}

TEST_CASE("block statistics of a rational") {
  auto x = rational_source(1, 3);
  auto st = normality_stats(*x, 10, 1, 1000);
  CHECK(st.freq.at("3") == 1.0);
  CHECK(st.max_deviation == doctest::Approx(0.9));
  CHECK(!st.consistent);
}

TEST_CASE("short horizons produce a warning") {
  auto x = sqrt_source(2);
  auto st = normality_stats(*x, 2, 10, 1000);
  CHECK(st.horizon_warning);  // 1000 digits cannot resolve 1024 blocks
}

TEST_CASE("irrationality witnesses") {
  auto w = liouville_witness(2, 3);
  CHECK(w.q == 512);
  CHECK(w.p == 801);
  CHECK(w.strict);
  CHECK(w.residual_lo > 0);
  CHECK(w.residual_hi < w.bound_lo);

  auto w10 = liouville_witness(10, 2);
  CHECK(w10.q == 10000);
  CHECK(w10.p == 11001);
  CHECK(w10.strict);

  CHECK(liouville_witness(2, 1).strict);
}

TEST_CASE("multiplier search for digit blocks") {
  auto hit = block_search(sqrt_source(2), 10, {7}, 100);
  CHECK(hit.found);
  CHECK(hit.m == 1);
  CHECK(hit.position == 11);
  CHECK(hit.m_max == 200);

  auto lac = block_search(lacunary_builtin("2^n"), 2, {1, 1}, 10000);
  CHECK(lac.found);
  CHECK(lac.m == 1);
  CHECK(lac.position == 1);
  CHECK(lac.m_max == 16);

  // 123 never occurs in 1/7 .. 6/7: their digits cycle through 142857
  auto none = block_search(rational_source(1, 7), 10, {1, 2, 3}, 42, 6);
  CHECK(!none.found);
  CHECK(none.m_max == 6);
}

TEST_CASE("triangular-gap source digit structure") {
  auto eta = eta_source();
  CHECK(eta->digit_string(3, 20) == "12122122212222122222");
  auto digits = eta->digit_vector(3, 1000);
  for (int k = 1; k <= 1000; ++k) {
    bool triangular = false;
    for (long n = 1; n * (n + 1) / 2 <= k; ++n)
      if (n * (n + 1) / 2 == k) triangular = true;
    CHECK(digits[k - 1] == (triangular ? 1 : 2));
  }
}

TEST_CASE("triangular-gap digits equal the morphic word") {
  auto eta = eta_source();
  auto digits = eta->digit_vector(3, 1000);
  Morphism m = named_morphism("eta");
  auto u = fixed_point(m, m.source().index_of("0"));
  CHECK(u->at(0) == 0);  // the word starts 012..., digits start at its offset 1
  for (int k = 1; k <= 1000; ++k) CHECK(digits[k - 1] == u->at(k));
}

TEST_CASE("digit generator source serves cross-base queries") {
  // 0.101010..._2 = 2/3
  auto gen = digit_generator_source(2, "gen", [](long n) {
    std::vector<int> d(n);
    for (long i = 0; i < n; ++i) d[i] = (i % 2 == 0) ? 1 : 0;
    return d;
  });
  CHECK(gen->digit_string(2, 12) == "101010101010");
  CHECK(gen->digit_string(10, 8) == "66666666");
}

}  // TEST_SUITE
