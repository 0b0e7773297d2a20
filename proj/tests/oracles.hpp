#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's Bessel kernels or quadrature rules.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace isodiff::oracle {

/// Power series sum_m (x/2)^{2m+nu} / (m! (m+nu)!) for nu in {0, 1}, in long
/// double, summed until the terms no longer change the total.
inline long double bessel_i_series(int nu, long double x) {
  const long double q = 0.25L * x * x;
  long double term = nu == 0 ? 1.0L : 0.5L * x;
  long double sum = term;
  for (int m = 1; m < 100000; ++m) {
    term *= q / (static_cast<long double>(m) * (m + nu));
    const long double next = sum + term;
    if (next == sum && m > x) break;
    sum = next;
  }
  return sum;
}

struct LongGaussRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

/// Gauss-Legendre rule on [-1, 1] by Golub-Welsch-free Newton iteration in
/// long double.
inline LongGaussRule long_gauss_legendre(int n) {
  LongGaussRule r{std::vector<long double>(n), std::vector<long double>(n)};
  for (int i = 0; i < n; ++i) {
    long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 200; ++it) {
      long double p0 = 1, p1 = 0;
      for (int j = 1; j <= n; ++j) {
        const long double p2 = p1;
        p1 = p0;
        p0 = ((2.0L * j - 1) * z * p1 - (j - 1.0L) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1);
      const long double dz = p0 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-19L) break;
    }
    r.nodes[i] = z;
    r.weights[i] = 2 / ((1 - z * z) * dp * dp);
  }
  return r;
}

/// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
template <typename F>
long double composite_gauss(F&& f, long double a, long double b, int panels, int order = 16) {
  static thread_local LongGaussRule rule;
  if (static_cast<int>(rule.nodes.size()) != order) rule = long_gauss_legendre(order);
  const long double width = (b - a) / panels;
  long double total = 0;
  for (int p = 0; p < panels; ++p) {
    const long double mid = a + (p + 0.5L) * width;
    long double s = 0;
    for (int i = 0; i < order; ++i) s += rule.weights[i] * f(mid + 0.5L * width * rule.nodes[i]);
    total += 0.5L * width * s;
  }
  return total;
}

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, nu in {0, 1}.
/// The factor exp(-x) is pulled out so the integrand is O(1) near t = 0,
/// and the range is cut where x (cosh t - 1) exceeds 60.
inline long double bessel_k_integral(int nu, long double x) {
  const long double upper = std::acosh(1.0L + 60.0L / x);
  const auto integrand = [x, nu](long double t) {
    const long double c = std::cosh(t);
    const long double weight = nu == 0 ? 1.0L : c;
    return std::exp(-x * (c - 1.0L)) * weight;
  };
  return std::exp(-x) * composite_gauss(integrand, 0.0L, upper, 600);
}

inline long double relative_error(long double got, long double want) {
  return std::fabs(got - want) / std::fabs(want);
}

}  // namespace isodiff::oracle
