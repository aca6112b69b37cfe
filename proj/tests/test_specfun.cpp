#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <swiptsic/specfun.hpp>

#include "oracles.hpp"

using namespace swiptsic;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("quadrature spec validation") {
  REQUIRE_THROWS_AS((QuadratureSpec{0.0, 1e-12, 100}.validate()), config_error);
  REQUIRE_THROWS_AS((QuadratureSpec{1e-9, -1.0, 100}.validate()), config_error);
  REQUIRE_THROWS_AS((QuadratureSpec{1e-9, 1e-12, 0}.validate()), config_error);
}

TEST_CASE("semi-infinite quadrature on reference integrals") {
  auto exp_decay = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
  REQUIRE(exp_decay.value == Catch::Approx(1.0).epsilon(1e-10));

  auto inverse_square = integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 1.0);
  REQUIRE(inverse_square.value == Catch::Approx(1.0).epsilon(1e-10));

  // 2*pi*lambda * int r/(1+r^4) dr = pi^2 * lambda / 2
  const double lambda = 1e-3;
  auto interference_mean = integrate_semi_infinite(
      [lambda](double r) { return 2.0 * kPi * lambda * r / (1.0 + r * r * r * r); }, 0.0);
  REQUIRE(interference_mean.value == Catch::Approx(kPi * kPi * lambda / 2.0).epsilon(1e-10));
  REQUIRE(interference_mean.value == Catch::Approx(4.9348022005446789e-3).epsilon(1e-10));
}

TEST_CASE("quadrature error estimate is trustworthy when tolerances tighten") {
  auto integrand = [](double x) { return std::exp(-0.3 * x) * std::cos(x) * std::cos(x); };
  for (double rt : {1e-5, 1e-6, 1e-7, 1e-8}) {
    QuadratureSpec loose{rt, 0.0, 2000};
    QuadratureSpec tight{rt / 2.0, 0.0, 2000};
    const auto a = integrate_semi_infinite(integrand, 0.0, loose);
    const auto b = integrate_semi_infinite(integrand, 0.0, tight);
    REQUIRE(std::abs(a.value - b.value) <= a.error_estimate);
  }
}

TEST_CASE("quadrature failure is loud") {
  QuadratureSpec starved{1e-12, 0.0, 1};
  REQUIRE_THROWS_AS(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, starved),
                    numerical_error);

  auto poisoned = [](double x) { return x < 0.5 ? 1.0 : std::nan(""); };
  REQUIRE_THROWS_AS(integrate_adaptive(poisoned, 0.0, 1.0), numerical_error);
}

TEST_CASE("nearest-neighbor distance pdf basics") {
  REQUIRE_THROWS_AS(nn_distance_pdf(1.0, 0, 1e-3), config_error);
  REQUIRE_THROWS_AS(nn_distance_pdf(1.0, 1, 0.0), config_error);
  REQUIRE_THROWS_AS(nn_distance_pdf(-1.0, 1, 1e-3), config_error);
  for (int n = 1; n <= 4; ++n) REQUIRE(nn_distance_pdf(0.0, n, 1e-3) == 0.0);
  REQUIRE(nn_distance_pdf(12.0, 1, 1e-3) > 0.0);
}

TEST_CASE("nearest-neighbor distance pdf normalizes for all orders") {
  for (double lambda : {1e-4, 1e-3, 1e-2}) {
    for (int n = 1; n <= 6; ++n) {
      auto mass = integrate_semi_infinite(
          [n, lambda](double r) { return nn_distance_pdf(r, n, lambda); }, 0.0);
      REQUIRE(mass.value == Catch::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("nearest-neighbor pdf mode matches numeric maximization") {
  const double lambda = 1e-3;
  // coarse grid scan followed by golden-section refinement
  double best_r = 0.0, best_f = -1.0;
  for (double r = 0.5; r < 60.0; r += 0.5) {
    const double f = nn_distance_pdf(r, 1, lambda);
    if (f > best_f) { best_f = f; best_r = r; }
  }
  double lo = best_r - 0.5, hi = best_r + 0.5;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  while (hi - lo > 1e-10) {
    const double x1 = hi - gr * (hi - lo);
    const double x2 = lo + gr * (hi - lo);
    if (nn_distance_pdf(x1, 1, lambda) < nn_distance_pdf(x2, 1, lambda)) lo = x1; else hi = x2;
  }
  const double mode = 0.5 * (lo + hi);
  REQUIRE(mode == Catch::Approx(1.0 / std::sqrt(2.0 * kPi * lambda)).epsilon(1e-8));
  REQUIRE(mode == Catch::Approx(12.6156626101).epsilon(1e-6));
}

TEST_CASE("gauss_2f1_neg domain checks") {
  REQUIRE_THROWS_AS(gauss_2f1_neg(1.0, 0.5, 1.5, 0.1), config_error);
  REQUIRE_THROWS_AS(gauss_2f1_neg(1.0, 1.5, 0.5, -1.0), config_error);
  REQUIRE_THROWS_AS(gauss_2f1_neg(1.0, -0.5, 1.5, -1.0), config_error);
  // a - b integral: the large-argument connection formula degenerates
  REQUIRE_THROWS_AS(gauss_2f1_neg(2.0, 1.0, 1.5, -100.0), numerical_error);
}

TEST_CASE("gauss_2f1_neg against the arctangent identity") {
  REQUIRE(gauss_2f1_neg(1.0, 0.5, 1.5, 0.0) == 1.0);
  REQUIRE(gauss_2f1_neg(1.0, 0.5, 1.5, -1.0) == Catch::Approx(kPi / 4.0).epsilon(1e-12));
  for (double z : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
    const double expected = std::atan(z) / z;
    REQUIRE(gauss_2f1_neg(1.0, 0.5, 1.5, -z * z) == Catch::Approx(expected).epsilon(1e-10));
  }
  REQUIRE(gauss_2f1_neg(1.0, 0.5, 1.5, -1e6) ==
          Catch::Approx(1.5697963271282298e-3).epsilon(1e-10));
}

TEST_CASE("gauss_2f1_neg against the Euler integral for the coverage family") {
  for (double alpha : {3.0, 4.0, 6.0}) {
    const double b = 1.0 - 2.0 / alpha;
    const double c = 2.0 - 2.0 / alpha;
    for (double z : {-0.3, -1.0, -3.9, -4.1, -5.0, -100.0, -1e4, -1e8}) {
      const double expected = oracles::euler_2f1(1.0, b, c, z);
      REQUIRE(gauss_2f1_neg(1.0, b, c, z) == Catch::Approx(expected).epsilon(1e-8));
    }
  }
}

TEST_CASE("gauss_2f1_neg decreases as the argument grows in magnitude") {
  for (double alpha : {3.0, 4.0, 6.0}) {
    const double b = 1.0 - 2.0 / alpha;
    const double c = 2.0 - 2.0 / alpha;
    double prev = gauss_2f1_neg(1.0, b, c, 0.0);
    for (double mag = 1.0; mag <= 1e10; mag *= 10.0) {
      const double cur = gauss_2f1_neg(1.0, b, c, -mag);
      REQUIRE(cur < prev);
      REQUIRE(cur > 0.0);
      prev = cur;
    }
  }
}
