#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "isodiff/numerics.hpp"
#include "isodiff/specfun.hpp"
#include "oracles.hpp"

using namespace isodiff::numerics;

TEST_CASE("RadialGrid invariants") {
  CHECK_THROWS_AS(RadialGrid({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid({1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid({2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid::log_spaced(1.0, 0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid::linear(0.0, 1.0, 10), std::invalid_argument);

  const auto g = RadialGrid::log_spaced(0.01, 40.0, 2000);
  CHECK(g.size() == 2000);
  CHECK(g.front() == 0.01);
  CHECK(g.back() == 40.0);
  const auto lin = RadialGrid::linear(1.0, 2.0, 11);
  CHECK(lin.min_spacing() == doctest::Approx(0.1));
  CHECK(g.restricted_from(0.1).front() >= 0.1);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  const auto rule = gauss_legendre(20);
  double w = 0, x38 = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    w += rule.weights[i];
    x38 += rule.weights[i] * std::pow(rule.nodes[i], 38);
  }
  CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x38 == doctest::Approx(2.0 / 39.0).epsilon(1e-13));
}

TEST_CASE("cumulative_integral basic cases") {
  const auto grid = RadialGrid::linear(0.1, 1.0, 10);
  const auto lin = cumulative_integral([](double r) { return 2 * r; }, grid, 1.0);
  CHECK(std::abs(lin.values.back() - 1.0) <= 1e-12);
  CHECK(std::abs(lin.values.front() - 0.01) <= 1e-12);

  const auto zero = cumulative_integral([](double) { return 0.0; }, grid, 1.0);
  for (const double v : zero.values) CHECK(v == 0.0);
}

TEST_CASE("cumulative_integral of r K0(r)^2 reaches 1/2") {
  using isodiff::specfun::bessel_k0;
  const auto f = [](double r) {
    const double k = bessel_k0(r);
    return r * k * k;
  };
  const auto grid = RadialGrid::log_spaced(0.01, 40.0, 2000);
  const auto norm = cumulative_integral(f, grid, 1.0);
  CHECK(std::abs(norm.values.back() - 0.5) <= 1e-8);

  // Independent check: substitute r = e^u, which removes the logarithmic
  // singularity, and integrate with the long-double oracle rule.
  const long double independent = isodiff::oracle::composite_gauss(
      [&](long double u) {
        const double r = std::exp(static_cast<double>(u));
        return static_cast<long double>(r * f(r));
      },
      -40.0L, std::log(40.0L), 400);
  CHECK(std::abs(static_cast<double>(independent) - 0.5) <= 1e-10);
  CHECK(std::abs(norm.values.back() - static_cast<double>(independent)) <= 1e-10);
}

TEST_CASE("cumulative_integral is monotone and refinement-stable") {
  using isodiff::specfun::bessel_i0;
  using isodiff::specfun::bessel_k0;
  const auto psi2 = [](double r) {
    const double v = std::sqrt(r) * (bessel_i0(r) + bessel_k0(r));
    return v * v;
  };
  const auto coarse = cumulative_integral(psi2, RadialGrid::log_spaced(0.01, 40.0, 1000), 1.0);
  const auto fine = cumulative_integral(psi2, RadialGrid::log_spaced(0.01, 40.0, 2000), 1.0);
  for (std::size_t i = 1; i < fine.values.size(); ++i) CHECK(fine.values[i] >= fine.values[i - 1]);
  CHECK(std::abs(fine.values.back() / coarse.values.back() - 1.0) <= 1e-9);
}

TEST_CASE("cumulative_integral rejects bad input") {
  const auto grid = RadialGrid::linear(0.1, 1.0, 5);
  CHECK_THROWS_AS(cumulative_integral([](double) { return -1e-10; }, grid, 1.0), std::domain_error);
  CHECK_NOTHROW(cumulative_integral([](double) { return -1e-15; }, grid, 1.0));
  CHECK_THROWS_AS(cumulative_integral([](double r) { return r; }, grid, -1.0), std::domain_error);
}

TEST_CASE("cumulative_at interpolates with a panel integral") {
  const auto grid = RadialGrid::log_spaced(0.1, 2.0, 7);
  const auto f = [](double r) { return 3 * r * r; };
  const auto norm = cumulative_integral(f, grid, 2.0);
  CHECK(cumulative_at(norm, f, 0.1) == norm.values.front());
  CHECK(cumulative_at(norm, f, 1.234) == doctest::Approx(std::pow(1.234, 3)).epsilon(1e-13));
  CHECK(cumulative_at(norm, f, 2.0) == doctest::Approx(8.0).epsilon(1e-13));
  CHECK_THROWS_AS(cumulative_at(norm, f, 2.5), std::out_of_range);
  CHECK_THROWS_AS(cumulative_at(norm, f, 0.05), std::out_of_range);
}

TEST_CASE("second_derivative_fd") {
  CHECK(std::abs(second_derivative_fd([](double r) { return r * r; }, 0.7, 1e-3) - 2.0) <= 1e-6);
  CHECK(std::abs(second_derivative_fd([](double r) { return r * r * r; }, 2.0, 1e-3) - 12.0) <= 1e-5);

  const auto f = [](double r) { return std::sin(r); };
  const auto err = [&](double h) { return std::abs(second_derivative_fd(f, 1.0, h) + std::sin(1.0)); };
  const double ratio = err(1e-2) / err(5e-3);
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.01));
  CHECK(observed_order(err(1e-2), err(5e-3)) >= 1.9);

  CHECK_THROWS_AS(second_derivative_fd(f, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(second_derivative_fd(f, 0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(first_derivative_fd(f, 0.1, 0.2), std::domain_error);
}
