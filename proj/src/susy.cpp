#include "isodiff/susy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isodiff::susy {
namespace {

void require_radius(double rho, const char* fn) {
  if (!std::isfinite(rho) || rho <= 0.0) {
    throw std::domain_error(std::string(fn) + ": rho must be finite and > 0");
  }
}

}  // namespace

SchrodingerProfile::SchrodingerProfile(double k, model::Superposition c) : k_(k), c_(c) {
  if (!std::isfinite(k) || k <= 0.0) throw std::invalid_argument("SchrodingerProfile: k must be > 0");
}

double psi(const SchrodingerProfile& p, double rho) {
  require_radius(rho, "psi");
  return std::sqrt(rho) * model::flux_general(rho, p.k(), p.coefficients());
}

double psi_prime(const SchrodingerProfile& p, double rho) {
  require_radius(rho, "psi_prime");
  const double phi = model::flux_general(rho, p.k(), p.coefficients());
  const double dphi = model::flux_general_prime(rho, p.k(), p.coefficients());
  const double root = std::sqrt(rho);
  return phi / (2.0 * root) + root * dphi;
}

double potential_bosonic(double rho, double k) {
  require_radius(rho, "potential_bosonic");
  return k * k - 1.0 / (4.0 * rho * rho);
}

double superpotential(const SchrodingerProfile& p, double rho) {
  require_radius(rho, "superpotential");
  // -psi'/psi = -(1/(2 rho) + phi'/phi); avoids forming psi for large rho.
  const double phi = model::flux_general(rho, p.k(), p.coefficients());
  const double dphi = model::flux_general_prime(rho, p.k(), p.coefficients());
  return -(0.5 / rho + dphi / phi);
}

double superpotential_prime(const SchrodingerProfile& p, double rho) {
  const double w = superpotential(p, rho);
  return w * w - potential_bosonic(rho, p.k());
}

double potential_fermionic(const SchrodingerProfile& p, double rho) {
  const double w = superpotential(p, rho);
  return 2.0 * w * w - potential_bosonic(rho, p.k());
}

double apply_a1(const SchrodingerProfile& p, double f, double f_prime, double rho) {
  return f_prime + superpotential(p, rho) * f;
}

double apply_a2(const SchrodingerProfile& p, double f, double f_prime, double rho) {
  return f_prime - superpotential(p, rho) * f;
}

}  // namespace isodiff::susy
