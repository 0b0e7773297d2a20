#pragma once

// Modified Bessel functions of the first and second kind, orders 0 and 1,
// for real non-negative arguments in double precision.
//
// Relative accuracy target is 1e-12 over the whole representable range.
// Domain violations throw std::domain_error; I0/I1 throw std::overflow_error
// once the result leaves the double range (x ~ 713). K0/K1 underflow quietly
// to zero for very large x.

namespace isodiff::specfun {

double bessel_i0(double x);
double bessel_i1(double x);
double bessel_k0(double x);
double bessel_k1(double x);

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209;

namespace detail {

// Regime boundaries. Exposed so tests can stitch-check both sides.
inline constexpr double i_series_limit = 30.0;
inline constexpr double k_series_limit = 2.0;

// Individual branches, no argument validation.
double i0_series(double x);
double i1_series(double x);
double i0_asymptotic(double x);
double i1_asymptotic(double x);

struct KPair {
  double k0;
  double k1;
};
KPair k_series(double x);
KPair k_continued_fraction(double x);

}  // namespace detail
}  // namespace isodiff::specfun
