#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "weyl/specfun.hpp"

using namespace weyl;
using std::numbers::pi;

TEST_CASE("bessel_j at closed-form points") {
  CHECK(std::abs(bessel_j(Order(0.5), pi)) < 1e-15);
  CHECK(bessel_j(Order(1.5), pi) == doctest::Approx(std::sqrt(2.0) / pi).epsilon(1e-13));
  CHECK(bessel_j(Order(0.0), 0.0) == 1.0);
  CHECK(bessel_j(Order(2.0), 0.0) == 0.0);

  const double j01 = oracle::j01_bisection();
  CHECK(std::abs(bessel_j(Order(1.0), j01) - oracle::j1_series(j01)) < 1e-14);
  CHECK(bessel_j(Order(1.0), j01) == doctest::Approx(0.5191475).epsilon(1e-7));
}

TEST_CASE("bessel_j rejects bad arguments") {
  CHECK_THROWS_AS(Order(-0.51), std::domain_error);
  CHECK_THROWS_AS(bessel_j(Order(1.0), -1.0), std::domain_error);
  CHECK_THROWS_AS(ZeroIndex(0), std::domain_error);
  CHECK_NOTHROW(Order(-0.5));
}

TEST_CASE("bessel_j matches the standard library on the contract range") {
  double worst = 0.0;
  for (double nu = 0.0; nu <= 10.0; nu += 0.25) {
    for (double x = 0.0; x <= 100.0; x += 0.37) {
      worst = std::max(worst, std::abs(bessel_j(Order(nu), x) - std::cyl_bessel_j(nu, x)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("half-integer orders agree with the trigonometric closed forms") {
  double worst = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (double x = 0.1; x <= 60.0; x += 0.0737) {
      worst = std::max(worst, std::abs(bessel_j(Order(l + 0.5), x) - oracle::half_integer_j(l, x)));
    }
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("negative order -1/2 is cos-type") {
  for (double x : {0.3, 1.0, 7.5, 40.0}) {
    CHECK(bessel_j(Order(-0.5), x) == doctest::Approx(std::sqrt(2.0 / (pi * x)) * std::cos(x)).epsilon(1e-12));
  }
}

TEST_CASE("derivative agrees with the recurrence") {
  for (double nu : {0.0, 0.5, 1.0, 2.5, 7.0}) {
    for (double x : {0.5, 3.0, 11.0, 45.0}) {
      const auto v = bessel_j_with_derivative(Order(nu), x);
      const double expected = nu == 0.0 ? -bessel_j(Order(1.0), x)
                                        : bessel_j(Order(nu - 1.0), x) - nu / x * bessel_j(Order(nu), x);
      CHECK(v.derivative == doctest::Approx(expected).epsilon(1e-11));
      CHECK(v.value == doctest::Approx(bessel_j(Order(nu), x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("bessel_zero examples") {
  CHECK(bessel_zero(Order(0.5), ZeroIndex(1)) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(std::abs(bessel_zero(Order(0.5), ZeroIndex(3)) - 3 * pi) < 1e-12);
  CHECK(std::abs(bessel_zero(Order(0.0), ZeroIndex(1)) - oracle::j01_bisection()) < 1e-12);
  CHECK(std::abs(bessel_zero(Order(0.0), ZeroIndex(1)) - 2.404825557695773) < 1e-12);
}

TEST_CASE("zeros of J_{1/2} are p pi") {
  for (long p = 1; p <= 100; ++p) {
    CHECK(std::abs(bessel_zero(Order(0.5), ZeroIndex(p)) - p * pi) < 1e-12);
  }
}

TEST_CASE("interlacing and residual") {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    for (long p = 1; p <= 100; ++p) {
      const double z = bessel_zero(Order(nu), ZeroIndex(p));
      const double up = bessel_zero(Order(nu + 1.0), ZeroIndex(p));
      const double next = bessel_zero(Order(nu), ZeroIndex(p + 1));
      CHECK(z < up);
      CHECK(up < next);
      CHECK(std::abs(bessel_j(Order(nu), z)) <= 1e-11);
    }
  }
}

TEST_CASE("zeros at the far end of the contract") {
  const double z = bessel_zero(Order(50.0), ZeroIndex(10000));
  CHECK(std::abs(bessel_j(Order(50.0), z)) < 1e-11);
  CHECK(z > bessel_zero(Order(50.0), ZeroIndex(9999)));
  CHECK(bessel_zero(Order(50.0), ZeroIndex(1)) == doctest::Approx(57.1168991601).epsilon(1e-10));
}

TEST_CASE("bessel_zeros_below lists the same zeros") {
  for (double nu : {0.0, 1.0, 3.5, 12.0}) {
    const auto zeros = bessel_zeros_below(Order(nu), 80.0);
    REQUIRE(!zeros.empty());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      CHECK(zeros[i] == doctest::Approx(bessel_zero(Order(nu), ZeroIndex(static_cast<long>(i) + 1))).epsilon(1e-14));
    }
    CHECK(bessel_zero(Order(nu), ZeroIndex(static_cast<long>(zeros.size()) + 1)) > 80.0);
  }
  CHECK(bessel_zeros_below(Order(30.0), 20.0).empty());
}

TEST_CASE("gamma") {
  CHECK(weyl::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(weyl::gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
  CHECK(weyl::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(weyl::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(weyl::gamma(-1.5), std::domain_error);

  double worst = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double x = 40.0 * i / 1000.0;
    worst = std::max(worst, std::abs(weyl::gamma(x + 1) - x * weyl::gamma(x)) / weyl::gamma(x + 1));
  }
  CHECK(worst <= 1e-12);

  for (double x = 0.05; x < 50.0; x += 0.5) {
    CHECK(weyl::gamma(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
}

TEST_CASE("unit ball volume and semiclassical constant") {
  CHECK(unit_ball_volume(Dim(2)) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(unit_ball_volume(Dim(3)) == doctest::Approx(4 * pi / 3).epsilon(1e-15));
  CHECK(unit_ball_volume(Dim(4)) == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  for (int n = 4; n <= 12; ++n) {
    const double lhs = unit_ball_volume(Dim(n));
    const double rhs = unit_ball_volume(Dim(n - 2)) * 2 * pi / n;
    CHECK(std::abs(lhs - rhs) / rhs <= 1e-13);
  }
  CHECK(semiclassical_constant(Dim(2)) == doctest::Approx(1 / (4 * pi)).epsilon(1e-15));
  CHECK(semiclassical_constant(Dim(4)) == doctest::Approx(0.0031664).epsilon(1e-4));
  CHECK(0.5 * std::exp(-1 / (4 * pi)) * semiclassical_constant(Dim(2)) == doctest::Approx(0.036745).epsilon(1e-5));
  CHECK_THROWS_AS(Dim(1), std::domain_error);
}
