#include <doctest.h>

#include <numeric>
#include <vector>

#include "wordnum/constructions.hpp"
#include "wordnum/reals.hpp"

using namespace wordnum;

TEST_SUITE("constructions") {

TEST_CASE("binary concatenation digits") {
  auto c = champernowne(2);
  CHECK(c->digit_string(2, 45) ==
        "110111001011101111000100110101011110011011110");
  CHECK(c->integer_part() == 0);
}

TEST_CASE("decimal concatenation digits") {
  auto c = champernowne(10);
  CHECK(c->digit_string(10, 20) == "12345678910111213141");
  auto hex = champernowne(16);
  CHECK(hex->digit_string(16, 15) == "123456789ABCDEF");
}

TEST_CASE("concatenation stream matches direct assembly") {
  auto c = champernowne(2);
  auto digits = c->digit_vector(2, 2000);
  std::vector<int> direct;
  for (long k = 1; (long)direct.size() < 2000; ++k) {
    std::vector<int> bits;
    for (long v = k; v > 0; v /= 2) bits.push_back((int)(v % 2));
    direct.insert(direct.end(), bits.rbegin(), bits.rend());
  }
  direct.resize(2000);
  CHECK(digits == direct);
}

TEST_CASE("block end positions") {
  CHECK(champernowne_position(1) == 1);
  CHECK(champernowne_position(2) == 3);
  CHECK(champernowne_position(3) == 5);
  CHECK(champernowne_position(4) == 8);
  // the digit ending block k is the low bit of k
  auto digits = champernowne(2)->digit_vector(2, 2000);
  for (long k = 1; k <= 200; ++k) {
    long pos = champernowne_position(k);
    CHECK(digits[pos - 1] == (int)(k % 2));
  }
  // consecutive blocks are adjacent: gap is the bit length of k+1
  for (long k = 1; k <= 200; ++k) {
    long width = 0;
    for (long v = k + 1; v > 0; v /= 2) ++width;
    CHECK(champernowne_position(k + 1) - champernowne_position(k) == width);
  }
}

TEST_CASE("closed formula reproduces the stream") {
  for (long K : {1L, 2L, 3L, 7L, 8L, 40L, 100L, 256L})
    CHECK(champernowne_closed_formula_check(K));
}

TEST_CASE("power-tower series source") {
  auto x = korobov_stoneham(3, 2);
  CHECK(x->integer_part() == 0);
  // tail beyond three terms is below 2^-80, so 60 digits match the partial sum
  mpq_class partial = mpq_class(1, 3 * 8) + mpq_class(1, 9 * 512) +
                      mpq_class(1, 27) / (mpz_class(1) << 27);
  partial.canonicalize();
  auto r = rational_source(partial.get_num(), partial.get_den());
  CHECK(x->digit_string(2, 60) == r->digit_string(2, 60));
}

TEST_CASE("power-tower series rejects non-coprime parameters") {
  CHECK_THROWS_AS(korobov_stoneham(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(korobov_stoneham(6, 9), std::invalid_argument);
  CHECK_THROWS_AS(korobov_stoneham(1, 2), std::invalid_argument);
  CHECK_NOTHROW(korobov_stoneham(3, 2));
}

TEST_CASE("power-tower series block statistics") {
  auto x = korobov_stoneham(3, 2);
  auto st = normality_stats(*x, 2, 1, 100000);
  CHECK(st.max_deviation > 0);
  CHECK(st.max_deviation < 1e-3);
  CHECK(st.consistent);
}

TEST_CASE("prime concatenation digits") {
  auto c = copeland_erdos(10);
  CHECK(c->digit_string(10, 14) == "23571113171923");
  auto c2 = copeland_erdos(2);
  CHECK(c2->digit_string(2, 30) == "101110111110111101100011001110");
}

TEST_CASE("prime stream") {
  auto primes = prime_prefix(10);
  CHECK(primes == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  auto many = prime_prefix(1000);
  CHECK(many.size() == 1000);
  CHECK(many.back() == 7919);
  for (std::size_t i = 1; i < many.size(); ++i) CHECK(many[i] > many[i - 1]);
}

TEST_CASE("prime concatenation digit counts") {
  CHECK(copeland_erdos_digit_count(10, 1) == 1);
  CHECK(copeland_erdos_digit_count(10, 4) == 4);
  CHECK(copeland_erdos_digit_count(10, 6) == 8);
  CHECK(copeland_erdos_digit_count(2, 4) == 10);
  // counts agree with a direct tally of rendered primes
  auto primes = prime_prefix(200);
  long total = 0;
  for (long i = 0; i < 200; ++i) {
    long width = 0;
    for (long v = primes[i]; v > 0; v /= 10) ++width;
    total += width;
    CHECK(copeland_erdos_digit_count(10, i + 1) == total);
  }
}

TEST_CASE("prime concatenation matches direct assembly") {
  auto digits = copeland_erdos(10)->digit_vector(10, 1000);
  auto primes = prime_prefix(400);
  std::vector<int> direct;
  for (long p : primes) {
    std::vector<int> ds;
    for (long v = p; v > 0; v /= 10) ds.push_back((int)(v % 10));
    direct.insert(direct.end(), ds.rbegin(), ds.rend());
    if ((long)direct.size() >= 1000) break;
  }
  direct.resize(1000);
  CHECK(digits == direct);
}

TEST_CASE("base validation") {
  CHECK_THROWS_AS(champernowne(1), std::invalid_argument);
  CHECK_THROWS_AS(copeland_erdos(1), std::invalid_argument);
}

}  // TEST_SUITE
