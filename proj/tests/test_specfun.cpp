#include "doctest.h"

#include "lorentz/specfun.hpp"
#include "series_oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace lorentz::specfun;

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

const std::vector<double> sample_x{1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 8.5, 10.0, 13.0,
                                   16.9, 17.0, 17.1, 20.0, 25.0, 30.0, 37.0, 44.4, 50.0};

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

} // namespace

TEST_CASE("Order stores twice nu and rejects unsupported orders") {
  CHECK(Order(1).value() == 0.5);
  CHECK(Order::integer(3).twice() == 6);
  CHECK(Order(-1).value() == -0.5);
  CHECK_FALSE(Order(3).is_integer());
  CHECK_THROWS_AS(Order(-2), std::domain_error);
  CHECK_THROWS_AS(Order(22), std::domain_error);
}

TEST_CASE("documented sample values") {
  CHECK(bessel_j(Order::integer(0), 0.0) == 1.0);
  CHECK(std::fabs(bessel_j(Order(1), pi)) < 1e-16);
  CHECK(rel(bessel_j(Order::integer(0), 1.0), oracle_series::J(0, 1.0)) < 1e-15);
  CHECK(std::fabs(bessel_n(Order(1), pi / 2)) < 1e-16);
  CHECK(rel(bessel_n(Order(1), pi), std::sqrt(2.0) / pi) < 1e-14);
  CHECK(rel(bessel_k(Order(1), 1.0), std::sqrt(pi / 2) * std::exp(-1.0)) < 1e-14);
  CHECK(rel(bessel_k(Order(1), 2.0), std::sqrt(pi / 4) * std::exp(-2.0)) < 1e-14);
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-15));
  CHECK(gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("K_0(20) is positive and below e^-20") {
  const double k = bessel_k(Order::integer(0), 20.0);
  CHECK(k > 0);
  CHECK(k <= std::exp(-20.0));
  CHECK(rel(k, std::sqrt(pi / 40.0) * std::exp(-20.0) * (1 - 1.0 / 160.0)) < 3e-4);
}

TEST_CASE("N_0 grows like (2/pi) ln(x/2) at the origin") {
  constexpr double euler = 0.5772156649015329;
  for (double x : {1e-2, 1e-4, 1e-6, 1e-9}) {
    // two terms of the ascending series; the rest is O(x^4 ln x)
    const double L = std::log(x / 2) + euler, q = x * x / 4;
    const double lead = 2.0 / pi * (L * (1 - q) + q);
    const double bound = q * q * (std::fabs(L) + 2) + 4e-16 * std::fabs(lead);
    CAPTURE(x);
    CHECK(std::fabs(bessel_n(Order::integer(0), x) - lead) <= bound);
  }
  CHECK(bessel_n(Order::integer(0), 1e-9) < bessel_n(Order::integer(0), 1e-6));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_j(Order::integer(0), -1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_j(Order(-1), 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_n(Order::integer(0), 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_n(Order(1), -2.0), std::domain_error);
  CHECK_THROWS_AS(bessel_k(Order::integer(1), 0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
  CHECK_THROWS_AS(bessel_j_prime(Order(21), 1.0), std::domain_error);
}

TEST_CASE("J at x = 0") {
  CHECK(bessel_j(Order::integer(1), 0.0) == 0.0);
  CHECK(bessel_j(Order(1), 0.0) == 0.0);
  CHECK(bessel_j(Order::integer(10), 0.0) == 0.0);
}

TEST_CASE("integer orders against 100-digit series") {
  for (int n = 0; n <= 10; ++n) {
    for (double x : sample_x) {
      CAPTURE(n);
      CAPTURE(x);
      const double j = oracle_series::J(2 * n, x);
      CHECK(std::fabs(bessel_j(Order::integer(n), x) - j) <= 1e-12 * std::fabs(j) + 1e-15);
      CHECK(rel(bessel_n(Order::integer(n), x), oracle_series::Y_int(n, x)) <= 1e-10);
      CHECK(rel(bessel_k(Order::integer(n), x), oracle_series::K_int(n, x)) <= 1e-10);
    }
  }
}

TEST_CASE("half-integer orders against closed forms") {
  for (double x = 0.1; x <= 30.0; x += 0.0997) {
    CAPTURE(x);
    const double c = std::sqrt(2.0 / (pi * x));
    const double j = c * std::sin(x), jm = c * std::cos(x), k = std::sqrt(pi / (2 * x)) * std::exp(-x);
    CHECK(std::fabs(bessel_j(Order(1), x) - j) <= 1e-12 * std::fabs(j) + 1e-15);
    CHECK(std::fabs(bessel_j(Order(-1), x) - jm) <= 1e-12 * std::fabs(jm) + 1e-15);
    CHECK(std::fabs(bessel_n(Order(1), x) + jm) <= 1e-12 * std::fabs(jm) + 1e-15);
    CHECK(std::fabs(bessel_n(Order(-1), x) - j) <= 1e-12 * std::fabs(j) + 1e-15);
    CHECK(std::fabs(bessel_k(Order(1), x) - k) <= 1e-12 * k + 1e-300);
    CHECK(bessel_k(Order(-1), x) == bessel_k(Order(1), x));
  }
}

TEST_CASE("higher half-integer orders against series") {
  for (int twice = 3; twice <= 21; twice += 2) {
    for (double x : sample_x) {
      CAPTURE(twice);
      CAPTURE(x);
      const double j = oracle_series::J(twice, x);
      CHECK(std::fabs(bessel_j(Order(twice), x) - j) <= 1e-12 * std::fabs(j) + 1e-15);
      CHECK(rel(bessel_n(Order(twice), x), oracle_series::Y_half(twice, x)) <= 1e-12);
      CHECK(rel(bessel_k(Order(twice), x), oracle_series::K_half(twice, x)) <= 1e-12);
    }
  }
}

TEST_CASE("three-term recurrences on [0.5, 30]") {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> ux(0.5, 30.0);
  for (int trial = 0; trial < 400; ++trial) {
    const double x = ux(rng);
    for (int twice = 1; twice <= 19; ++twice) {
      CAPTURE(x);
      CAPTURE(twice);
      const Order lo(twice - 2), mid(twice), hi(twice + 2);
      const double c = twice / x;  // 2 nu / x
      {
        const double a = bessel_j(lo, x), b = bessel_j(hi, x), m = bessel_j(mid, x);
        CHECK(std::fabs(a + b - c * m) <= 1e-9 * (std::fabs(a) + std::fabs(b)));
      }
      {
        const double a = bessel_n(lo, x), b = bessel_n(hi, x), m = bessel_n(mid, x);
        CHECK(std::fabs(a + b - c * m) <= 1e-9 * (std::fabs(a) + std::fabs(b)));
      }
      {
        const double a = bessel_k(lo, x), b = bessel_k(hi, x), m = bessel_k(mid, x);
        CHECK(std::fabs(b - a - c * m) <= 1e-9 * std::fabs(b));
      }
    }
  }
}

TEST_CASE("Wronskian J N' - J' N = 2 / (pi x)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(0.5, 30.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double x = ux(rng);
    for (int twice = -1; twice <= 19; ++twice) {
      CAPTURE(x);
      CAPTURE(twice);
      const Order nu(twice);
      const double w = bessel_j(nu, x) * bessel_n_prime(nu, x) - bessel_j_prime(nu, x) * bessel_n(nu, x);
      CHECK(rel(w, 2.0 / (pi * x)) <= 1e-9);
    }
  }
}

TEST_CASE("K' matches a centred difference") {
  for (int twice = 0; twice <= 19; ++twice) {
    for (double x : {0.7, 2.0, 6.0, 15.0}) {
      const double h = 1e-5 * x;
      const double fd = (bessel_k(Order(twice), x + h) - bessel_k(Order(twice), x - h)) / (2 * h);
      CHECK(rel(bessel_k_prime(Order(twice), x), fd) < 1e-7);
    }
  }
}

TEST_CASE("K is positive") {
  for (int twice = -1; twice <= 21; ++twice) {
    for (double x = 1e-3; x < 700.0; x *= 1.3) {
      CAPTURE(twice);
      CAPTURE(x);
      CHECK(bessel_k(Order(twice), x) > 0);
    }
  }
}

TEST_CASE("Gamma against 100-digit reference on (0, 30]") {
  for (double x = 0.01; x <= 30.0; x += 0.173) {
    CAPTURE(x);
    CHECK(rel(gamma_fn(x), oracle_series::gamma(x)) <= 1e-12);
  }
  CHECK(rel(gamma_fn(30.0), oracle_series::gamma(30.0)) <= 1e-12);
}
