#include "isodiff/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "isodiff/specfun.hpp"

namespace isodiff::model {
namespace {

using specfun::bessel_i0;
using specfun::bessel_i1;
using specfun::bessel_k0;
using specfun::bessel_k1;

void require_radius(double rho, const char* fn) {
  if (!std::isfinite(rho) || rho <= 0.0) {
    throw std::domain_error(std::string(fn) + ": rho must be finite and > 0");
  }
}

void require_k(double k, const char* fn) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw std::domain_error(std::string(fn) + ": k must be finite and > 0");
  }
}

}  // namespace

Medium::Medium(double lambda_s, double atomic_number, double sigma_a)
    : lambda_s_(lambda_s), atomic_number_(atomic_number), sigma_a_(sigma_a) {
  if (!std::isfinite(lambda_s) || lambda_s <= 0.0) {
    throw std::invalid_argument("Medium: lambda_s must be > 0");
  }
  if (!std::isfinite(atomic_number) || atomic_number < 1.0) {
    throw std::invalid_argument("Medium: atomic number must be >= 1");
  }
  if (!std::isfinite(sigma_a) || sigma_a <= 0.0) {
    throw std::invalid_argument("Medium: sigma_a must be > 0");
  }
}

LineSource::LineSource(double s0) : s0_(s0) {
  if (!std::isfinite(s0) || s0 <= 0.0) throw std::invalid_argument("LineSource: s0 must be > 0");
}

Superposition::Superposition(double a1, double a2) : a1_(a1), a2_(a2) {
  if (!std::isfinite(a1) || !std::isfinite(a2) || a1 < 0.0 || a2 < 0.0) {
    throw std::invalid_argument("Superposition: a1 and a2 must be finite and >= 0");
  }
  if (a1 == 0.0 && a2 == 0.0) {
    throw std::invalid_argument("Superposition: a1 and a2 must not both be zero");
  }
}

double diffusion_constant(const Medium& m) {
  return m.lambda_s() / (3.0 * (1.0 - 2.0 / (3.0 * m.atomic_number())));
}

double inverse_diffusion_length(const Medium& m) {
  return std::sqrt(m.sigma_a() / diffusion_constant(m));
}

double flux_physical(double rho, const Medium& m, const LineSource& s) {
  require_radius(rho, "flux_physical");
  const double k = inverse_diffusion_length(m);
  return s.s0() / (2.0 * std::numbers::pi * diffusion_constant(m)) * bessel_k0(k * rho);
}

double flux_general(double rho, double k, const Superposition& c) {
  require_radius(rho, "flux_general");
  require_k(k, "flux_general");
  const double x = k * rho;
  const double grow = c.a1() == 0.0 ? 0.0 : c.a1() * bessel_i0(x);
  const double decay = c.a2() == 0.0 ? 0.0 : c.a2() * bessel_k0(x);
  return grow + decay;
}

double flux_general_prime(double rho, double k, const Superposition& c) {
  require_radius(rho, "flux_general_prime");
  require_k(k, "flux_general_prime");
  const double x = k * rho;
  const double grow = c.a1() == 0.0 ? 0.0 : c.a1() * bessel_i1(x);
  const double decay = c.a2() == 0.0 ? 0.0 : c.a2() * bessel_k1(x);
  return k * (grow - decay);
}

double flux_general_second(double rho, double k, const Superposition& c) {
  require_radius(rho, "flux_general_second");
  require_k(k, "flux_general_second");
  // I1' = I0 - I1/x, K1' = -K0 - K1/x.
  const double x = k * rho;
  const double grow = c.a1() == 0.0 ? 0.0 : c.a1() * (bessel_i0(x) - bessel_i1(x) / x);
  const double decay = c.a2() == 0.0 ? 0.0 : c.a2() * (bessel_k0(x) + bessel_k1(x) / x);
  return k * k * (grow + decay);
}

double pillbox_flow(double rho, const Medium& m, const LineSource& s) {
  require_radius(rho, "pillbox_flow");
  const double x = inverse_diffusion_length(m) * rho;
  return s.s0() * x * bessel_k1(x);
}

}  // namespace isodiff::model
