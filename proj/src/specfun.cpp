#include "isodiff/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace isodiff::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 2000;

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(fn) + ": non-finite argument");
  }
}

void require_nonnegative(double x, const char* fn) {
  require_finite(x, fn);
  if (x < 0.0) {
    throw std::domain_error(std::string(fn) + ": argument must be >= 0");
  }
}

void require_positive(double x, const char* fn) {
  require_finite(x, fn);
  if (x <= 0.0) {
    throw std::domain_error(std::string(fn) + ": argument must be > 0");
  }
}

// Hankel-type expansion e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k,
// mu = 4 nu^2. Summed until the terms stop shrinking or drop below eps.
double i_asymptotic(double x, double mu) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  // Split the exponential so results near DBL_MAX do not overflow early.
  const double half = std::exp(0.5 * x);
  return half * (sum / std::sqrt(2.0 * std::numbers::pi * x)) * half;
}

double check_overflow(double value, const char* fn) {
  if (!std::isfinite(value)) {
    throw std::overflow_error(std::string(fn) + ": result exceeds double range");
  }
  return value;
}

}  // namespace

namespace detail {

double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < kMaxTerms; ++m) {
    term *= q / (static_cast<double>(m) * m);
    sum += term;
    if (term < kEps * sum) break;
  }
  return sum;
}

double i1_series(double x) {
  const double q = 0.25 * x * x;
  double term = 0.5 * x;
  double sum = term;
  for (int m = 1; m < kMaxTerms; ++m) {
    term *= q / (static_cast<double>(m) * (m + 1));
    sum += term;
    if (term <= kEps * sum) break;
  }
  return sum;
}

double i0_asymptotic(double x) { return i_asymptotic(x, 0.0); }
double i1_asymptotic(double x) { return i_asymptotic(x, 4.0); }

KPair k_series(double x) {
  const double q = 0.25 * x * x;
  const double log_half = std::log(0.5 * x);

  // K0 = -(ln(x/2) + gamma) I0 + sum_{m>=1} q^m/(m!)^2 H_m
  // K1 = 1/x + ln(x/2) I1 - (x/4) sum_{m>=0} q^m/(m!(m+1)!) (H_m + H_{m+1} - 2 gamma)
  double t0 = 1.0;          // q^m / (m!)^2
  double t1 = 1.0;          // q^m / (m! (m+1)!)
  double harmonic = 0.0;    // H_m
  double i0 = 1.0;
  double i1 = 1.0;
  double s0 = 0.0;
  double s1 = 1.0 - 2.0 * euler_gamma;
  for (int m = 1; m < kMaxTerms; ++m) {
    t0 *= q / (static_cast<double>(m) * m);
    t1 *= q / (static_cast<double>(m) * (m + 1));
    harmonic += 1.0 / m;
    const double harmonic_next = harmonic + 1.0 / (m + 1);
    i0 += t0;
    i1 += t1;
    s0 += t0 * harmonic;
    s1 += t1 * (harmonic + harmonic_next - 2.0 * euler_gamma);
    if (t0 * harmonic_next < kEps * kEps) break;
  }
  i1 *= 0.5 * x;
  return {-(log_half + euler_gamma) * i0 + s0, 1.0 / x + log_half * i1 - 0.25 * x * s1};
}

// Steed's continued fraction (Temme's CF2 variant) for K0 and K1.
// Converges quickly for x >= 2.
KPair k_continued_fraction(double x) {
  constexpr double a1 = 0.25;  // 1/4 - nu^2 at nu = 0
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < kMaxTerms; ++i) {
    a -= 2.0 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 0.5 * kEps) break;
  }
  h *= a1;
  const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

}  // namespace detail

double bessel_i0(double x) {
  require_nonnegative(x, "bessel_i0");
  if (x <= detail::i_series_limit) return detail::i0_series(x);
  return check_overflow(detail::i0_asymptotic(x), "bessel_i0");
}

double bessel_i1(double x) {
  require_nonnegative(x, "bessel_i1");
  if (x <= detail::i_series_limit) return detail::i1_series(x);
  return check_overflow(detail::i1_asymptotic(x), "bessel_i1");
}

double bessel_k0(double x) {
  require_positive(x, "bessel_k0");
  if (x <= detail::k_series_limit) return detail::k_series(x).k0;
  return detail::k_continued_fraction(x).k0;
}

double bessel_k1(double x) {
  require_positive(x, "bessel_k1");
  if (x <= detail::k_series_limit) return detail::k_series(x).k1;
  return detail::k_continued_fraction(x).k1;
}

}  // namespace isodiff::specfun
