#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "thzff/error.hpp"
#include "thzff/units.hpp"

using namespace thzff;

TEST_CASE("db_to_linear decades") {
  CHECK(db_to_linear(Db{0.0}) == 1.0);
  CHECK(db_to_linear(Db{20.0}) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(db_to_linear(Db{30.0}) == doctest::Approx(1000.0).epsilon(1e-15));
  CHECK_THROWS_AS(db_to_linear(Db{std::numeric_limits<double>::infinity()}), DomainError);
  CHECK_THROWS_AS(db_to_linear(Db{std::nan("")}), DomainError);
}

TEST_CASE("dbm_to_watts") {
  CHECK(dbm_to_watts(Dbm{30.0}) == 1.0);
  CHECK(dbm_to_watts(Dbm{0.0}) == doctest::Approx(1e-3).epsilon(1e-15));
  // 10^(-1.3) W, evaluated with mpmath.
  CHECK(dbm_to_watts(Dbm{17.0}) == doctest::Approx(0.0501187233627272285).epsilon(1e-14));
  CHECK_THROWS_AS(dbm_to_watts(Dbm{-std::numeric_limits<double>::infinity()}), DomainError);
}

TEST_CASE("dbm_to_watts shares the dB exponent arithmetic") {
  for (double p = -60.0; p <= 60.0; p += 0.37) {
    CHECK(dbm_to_watts(Dbm{p}) == db_to_linear(Db{p}) / 1000.0);
  }
}

TEST_CASE("wavelength") {
  CHECK(wavelength(300e9) == doctest::Approx(9.99308193333333e-4).epsilon(1e-14));
  CHECK(wavelength(1e12) == doctest::Approx(2.99792458e-4).epsilon(1e-15));
  CHECK(wavelength(constants::kSpeedOfLight) == 1.0);
  CHECK_THROWS_AS(wavelength(0.0), DomainError);
  CHECK_THROWS_AS(wavelength(-1.0), DomainError);
}

TEST_CASE("wavelength strictly decreasing in frequency") {
  double prev = wavelength(1e9);
  for (double f = 2e9; f < 1e13; f *= 1.7) {
    const double w = wavelength(f);
    CHECK(w < prev);
    prev = w;
  }
}

TEST_CASE("linear -> dB -> linear round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    const double back = db_to_linear(linear_to_db(x));
    CHECK(std::abs(back - x) / x <= 1e-12);
  }
  CHECK_THROWS_AS(linear_to_db(0.0), DomainError);
  CHECK_THROWS_AS(linear_to_db(-2.0), DomainError);
}

TEST_CASE("watts_to_dbm inverts dbm_to_watts") {
  for (double p : {-30.0, -10.0, 0.0, 17.0, 23.0, 40.0}) {
    CHECK(watts_to_dbm(dbm_to_watts(Dbm{p})).value == doctest::Approx(p).epsilon(1e-12));
  }
}
