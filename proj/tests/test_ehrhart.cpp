#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossehr/colored.hpp"
#include "crossehr/ehrhart.hpp"
#include "crossehr/words.hpp"
#include "oracles.hpp"

using namespace crossehr;

TEST_CASE("closed form evaluation") {
  CHECK(P(3, 1, 1) == 5);
  CHECK(P(2, 2, 1) == 5);
  CHECK(P(2, 2, 1) == count_lattice_points(2, 2, 1));
  for (int d = 1; d <= 6; ++d) {
    for (int k = 0; k <= d; ++k) CHECK(P(d, k, 0) == 1);
  }
  CHECK_THROWS_AS(P(3, 1, -1), std::invalid_argument);
}

TEST_CASE("coefficient vectors on worked values") {
  CHECK(coeffs(3, 0).str() == "(6, 11, 6, 1)");
  CHECK(coeffs(3, 3).str() == "(6, 16, 12, 8)");
  CHECK(coeffs(2, 2).str() == "(2, 4, 4)");
  for (int j = 0; j <= 3; ++j) {
    CHECK(coeffs(3, 0).at(j) == stirling_first_unsigned(4, j + 1));
  }
}

TEST_CASE("coefficients agree with the polynomial-fit oracle") {
  for (int d = 1; d <= 5; ++d) {
    for (int k = 0; k <= d; ++k) {
      std::vector<Int> values;
      for (long n = 0; n <= d; ++n) values.push_back(factorial(d) * P(d, k, n));
      auto fitted = oracles::fit_integer_polynomial(values);
      CHECK(fitted == coeffs(d, k).c());
    }
  }
}

TEST_CASE("the defining equation holds at many points") {
  for (int d = 1; d <= 7; ++d) {
    for (int k = 0; k <= d; ++k) {
      auto cv = coeffs(d, k);
      for (long n = 0; n <= 10; ++n) {
        CHECK(cv.eval(n) == factorial(d) * P(d, k, n));
      }
    }
  }
}

TEST_CASE("coefficient positivity") {
  for (int d = 1; d <= 12; ++d) {
    for (int k = 0; k <= d; ++k) {
      auto cv = coeffs(d, k);
      for (const Int& v : cv.c()) CHECK(v > 0);
    }
  }
}

TEST_CASE("generating function series") {
  auto s = gf_series(3, 1, 5);
  const Int expect[] = {1, 5, 14, 30, 55, 91};
  for (int n = 0; n <= 5; ++n) {
    CHECK(s[n] == Rat(expect[n]));
  }
  for (int d = 1; d <= 8; ++d) {
    auto g0 = gf_series(d, 0, 12);
    for (int n = 0; n <= 12; ++n) CHECK(g0[n] == Rat(binomial(n + d, d)));
  }
}

TEST_CASE("series coefficients equal P up to order 20") {
  for (int d = 1; d <= 8; ++d) {
    for (int k = 0; k <= d; ++k) {
      auto s = gf_series(d, k, 20);
      CHECK(s[0] == 1);
      for (int n = 0; n <= 20; ++n) {
        CHECK(s[n] == Rat(P(d, k, n)));
      }
    }
  }
}

TEST_CASE("h* machinery") {
  CHECK(hstar_to_scaled_coeffs(3, {1, 3, 3, 1}) == coeffs(3, 3).c());
  CHECK(hstar_to_scaled_coeffs(2, {1, 1}) == IntPoly{2, 4, 2});
  for (int d = 1; d <= 6; ++d) {
    IntPoly one{1};
    auto out = hstar_to_scaled_coeffs(d, one);
    for (int j = 0; j <= d; ++j) {
      CHECK(out[j] == stirling_first_unsigned(d + 1, j + 1));
    }
  }
  CHECK_THROWS_AS(hstar_to_scaled_coeffs(2, {1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("binomial h* reproduces the cross-polytope coefficients") {
  for (int d = 1; d <= 7; ++d) {
    for (int k = 0; k <= d; ++k) {
      IntPoly h;
      for (int i = 0; i <= k; ++i) h.push_back(binomial(k, i));
      CHECK(hstar_to_scaled_coeffs(d, h) == coeffs(d, k).c());
    }
  }
}

TEST_CASE("unit cube identity") {
  for (int d = 1; d <= 10; ++d) {
    auto r = cube_identity_check(d);
    CHECK(r.pass);
  }
  auto r2 = cube_identity_check(2);
  CHECK(r2.lhs == "(2, 4, 2)");
  CHECK(r2.rhs == "(2, 4, 2)");
}

TEST_CASE("exponential generating function for k = d") {
  auto r = egf_check(8, 8);
  CHECK(r.pass);
  CHECK(coeffs(3, 3).at(3) == 8);
  CHECK(coeffs(2, 2).at(1) == 4);
  for (int d = 1; d <= 8; ++d) {
    CHECK(coeffs(d, d).at(0) == factorial(d));
  }
  CHECK_THROWS_AS(egf_check(11, 3), std::invalid_argument);
}

TEST_CASE("series arithmetic basics") {
  auto g = TruncatedSeries::geometric(6);
  auto one_minus_x = TruncatedSeries(6);
  one_minus_x[0] = 1;
  one_minus_x[1] = -1;
  auto prod = g * one_minus_x;
  CHECK(prod[0] == 1);
  for (int i = 1; i <= 6; ++i) CHECK(prod[i] == 0);
  CHECK(trim_poly({Int(1), Int(0), Int(2), Int(0)}) == IntPoly{1, 0, 2});
  CHECK(trim_poly({Int(0)}) == IntPoly{});
}
