#include <doctest.h>

#include <vector>

#include "wordnum/automata.hpp"
#include "wordnum/fpseries.hpp"
#include "wordnum/words.hpp"

using namespace wordnum;

TEST_SUITE("fpseries") {

TEST_CASE("series constructors") {
  auto z = TruncatedSeries::zero(2, 5);
  CHECK(z.order() == 5);
  CHECK(z.c == std::vector<long long>{0, 0, 0, 0, 0});
  auto k = TruncatedSeries::constant(0, -3, 4);
  CHECK(k.c == std::vector<long long>{-3, 0, 0, 0});
  auto opx = TruncatedSeries::one_plus_x(2, 3);
  CHECK(opx.c == std::vector<long long>{1, 1, 0});
  CHECK(opx.coeff(0) == 1);
  CHECK(opx.coeff(17) == 0);  // past the truncation order
}

TEST_CASE("series arithmetic mod 2") {
  auto a = TruncatedSeries::one_plus_x(2, 6);
  auto sum = series_add(a, a);
  CHECK(sum.c == std::vector<long long>{0, 0, 0, 0, 0, 0});
  // (1+X)^2 = 1 + X^2 over F_2
  auto sq = series_mul(a, a);
  CHECK(sq.c == std::vector<long long>{1, 0, 1, 0, 0, 0});
  auto p4 = series_pow(a, 4);
  CHECK(p4.c == std::vector<long long>{1, 0, 0, 0, 1, 0});
  auto p0 = series_pow(a, 0);
  CHECK(p0.c == std::vector<long long>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("series arithmetic over the integers") {
  TruncatedSeries a{0, {1, -1, 2}};
  TruncatedSeries b{0, {3, 5, 0}};
  auto prod = series_mul(a, b);
  // (1 - X + 2X^2)(3 + 5X) = 3 + 2X + X^2 + O(X^3)
  CHECK(prod.c == std::vector<long long>{3, 2, 1});
  auto cube = series_pow(TruncatedSeries{0, {1, 1, 0, 0}}, 3);
  CHECK(cube.c == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("mixed moduli are rejected") {
  auto a = TruncatedSeries::one_plus_x(2, 4);
  auto b = TruncatedSeries::one_plus_x(3, 4);
  CHECK_THROWS_AS(series_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(series_add(a, b), std::invalid_argument);
}

TEST_CASE("indicator series coefficients") {
  auto f = ptm_series(32);
  CHECK(f.modulus == 2);
  const auto& machine = dfao_builtin("ptm");
  for (std::size_t n = 0; n < 32; ++n) {
    int bit = (int)dfao_eval(machine, mpz_class((unsigned long)n));
    CHECK(f.coeff(n) == bit);
  }
  CHECK(f.coeff(0) == 0);
  CHECK(f.coeff(1) == 1);
  CHECK(f.coeff(2) == 1);
  CHECK(f.coeff(3) == 0);
}

TEST_CASE("cubic equation for the indicator series") {
  CHECK(verify_ptm_cubic(64));
  CHECK(verify_ptm_cubic(4096));
}

TEST_CASE("cubic equation residual is visible when perturbed") {
  // replaying the combination with a flipped coefficient must not vanish
  std::size_t order = 256;
  auto f = ptm_series(order);
  f.c[100] ^= 1;
  auto opx = TruncatedSeries::one_plus_x(2, order);
  auto lhs = series_add(
      series_add(series_mul(series_pow(opx, 3), series_mul(f, f)),
                 series_mul(series_pow(opx, 2), f)),
      TruncatedSeries{2, [&] {
                        std::vector<long long> x(order, 0);
                        x[1] = 1;
                        return x;
                      }()});
  bool all_zero = true;
  for (auto v : lhs.c) all_zero = all_zero && v == 0;
  CHECK(!all_zero);
}

TEST_CASE("product expansion signs follow the bit-parity word") {
  auto m = mahler_product(2048);
  CHECK(m.modulus == 0);
  const auto& machine = dfao_builtin("ptm");
  for (std::size_t n = 0; n < 2048; ++n) {
    int bit = (int)dfao_eval(machine, mpz_class((unsigned long)n));
    CHECK(m.coeff(n) == 1 - 2 * bit);
  }
}

TEST_CASE("product satisfies its functional equation") {
  CHECK(verify_mahler_functional_equation(64));
  CHECK(verify_mahler_functional_equation(2048));
}

TEST_CASE("periodicity detector") {
  TruncatedSeries s{0, {9, 9, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2}};
  auto rep = detect_ultimately_periodic(s);
  CHECK(rep.periodic);
  CHECK(rep.preperiod == 2);
  CHECK(rep.period == 3);

  TruncatedSeries constant{0, {5, 5, 5, 5, 5, 5}};
  auto crep = detect_ultimately_periodic(constant);
  CHECK(crep.periodic);
  CHECK(crep.preperiod == 0);
  CHECK(crep.period == 1);

  // the bit-parity series is aperiodic at any materialized horizon
  auto f = ptm_series(4096);
  CHECK(!detect_ultimately_periodic(f).periodic);

  // insisting on more repeats can refuse a short tail
  TruncatedSeries short_tail{0, {7, 1, 2, 1, 2}};
  CHECK(detect_ultimately_periodic(short_tail, 2).periodic);
  CHECK(!detect_ultimately_periodic(short_tail, 3).periodic);
}

}  // TEST_SUITE
