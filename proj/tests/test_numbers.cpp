#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossehr/numbers.hpp"
#include "oracles.hpp"

using namespace crossehr;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(3) == 6);
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(7, 7) == 1);
  CHECK(binomial(7, 8) == 0);
  CHECK(binomial_big(Int(40), 3) == binomial(40, 3));
  CHECK(binomial_big(Int(2), 5) == 0);
}

TEST_CASE("signed Stirling values and conventions") {
  CHECK(stirling_first_signed(0, 0) == 1);
  CHECK(stirling_first_signed(3, 2) == -3);
  CHECK(stirling_first_signed(4, 1) == -6);
  CHECK(stirling_first_signed(4, -1) == 0);
  CHECK(stirling_first_signed(4, 5) == 0);
}

TEST_CASE("signed Stirling matches the falling factorial expansion") {
  for (int m = 0; m <= 8; ++m) {
    auto poly = oracles::falling_factorial_coeffs(m);
    for (int i = 0; i <= m; ++i) {
      CHECK(stirling_first_signed(m, i) == poly[i]);
    }
  }
}

TEST_CASE("unsigned Stirling counts permutations by cycles") {
  CHECK(stirling_first_unsigned(4, 2) == oracles::count_perms_with_cycles(4, 2));
  CHECK(stirling_first_unsigned(4, 2) == 11);
  CHECK(stirling_first_unsigned(3, 0) == 0);
  for (int m = 1; m <= 6; ++m) {
    CHECK(stirling_first_unsigned(m, m) == 1);
    for (int i = 1; i <= m; ++i) {
      CHECK(stirling_first_unsigned(m, i) == oracles::count_perms_with_cycles(m, i));
    }
  }
}

TEST_CASE("Stirling row sums, signs, and recurrence") {
  for (int m = 0; m <= 8; ++m) {
    Int row = 0;
    for (int i = 0; i <= m; ++i) {
      Int u = stirling_first_unsigned(m, i);
      row += u;
      Int s = stirling_first_signed(m, i);
      CHECK(abs(s) == u);
      if (s != 0) {
        CHECK(((m - i) % 2 == 0 ? s > 0 : s < 0));
      }
      if (m >= 1) {
        CHECK(s == stirling_first_signed(m - 1, i - 1) - (m - 1) * stirling_first_signed(m - 1, i));
      }
    }
    CHECK(row == factorial(m));
  }
}

TEST_CASE("Eulerian numbers") {
  CHECK(eulerian(3, 1) == 4);
  CHECK(eulerian(2, 1) == 1);
  CHECK(eulerian(3, 1) == oracles::count_perms_with_descents(3, 1));
  for (int d = 1; d <= 8; ++d) {
    CHECK(eulerian(d, 0) == 1);
    CHECK(eulerian(d, d) == 0);
    CHECK(eulerian(d, -1) == 0);
    Int row = 0;
    for (int i = 0; i < d; ++i) {
      row += eulerian(d, i);
      if (d >= 2) {
        CHECK(eulerian(d, i) == (i + 1) * eulerian(d - 1, i) + (d - i) * eulerian(d - 1, i - 1));
      }
    }
    CHECK(row == factorial(d));
  }
  for (int d = 1; d <= 6; ++d) {
    for (int i = 0; i < d; ++i) {
      CHECK(eulerian(d, i) == oracles::count_perms_with_descents(d, i));
    }
  }
}

TEST_CASE("e(d,i,j) kernel") {
  CHECK(e_coefficient(2, 1, 1) == 1);
  CHECK(e_coefficient(2, 1, 0) == 0);
  for (int d = 1; d <= 6; ++d) {
    for (int j = 0; j <= d; ++j) {
      CHECK(e_coefficient(d, 0, j) == stirling_first_unsigned(d + 1, j + 1));
    }
  }
  CHECK_THROWS_AS(e_coefficient(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(e_coefficient(3, 4, 0), std::invalid_argument);
}
