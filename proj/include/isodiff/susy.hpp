#pragma once

#include "isodiff/model.hpp"

// Witten factorization of the self-adjoint radial equation
//   psi'' - V_B psi = 0,  psi = sqrt(rho) phi,  V_B = k^2 - 1/(4 rho^2).
// All quantities are closed forms; every operation requires rho > 0 and
// throws std::domain_error otherwise.

namespace isodiff::susy {

/// Zero-energy seed solution psi(rho) = sqrt(rho) (a1 I0(k rho) + a2 K0(k rho)).
/// Nodeless on (0, inf) by the Superposition invariant.
class SchrodingerProfile {
 public:
  SchrodingerProfile(double k, model::Superposition c);

  double k() const { return k_; }
  const model::Superposition& coefficients() const { return c_; }

 private:
  double k_;
  model::Superposition c_;
};

double psi(const SchrodingerProfile& p, double rho);
double psi_prime(const SchrodingerProfile& p, double rho);

/// V_B = k^2 - 1/(4 rho^2).
double potential_bosonic(double rho, double k);

/// W = -psi'/psi.
double superpotential(const SchrodingerProfile& p, double rho);

/// W' from the Riccati relation, W^2 - V_B.
double superpotential_prime(const SchrodingerProfile& p, double rho);

/// V_F = W^2 + W', evaluated as 2 W^2 - V_B.
double potential_fermionic(const SchrodingerProfile& p, double rho);

/// A1 f = f' + W f and A2 f = f' - W f, given f and f' at rho.
double apply_a1(const SchrodingerProfile& p, double f, double f_prime, double rho);
double apply_a2(const SchrodingerProfile& p, double f, double f_prime, double rho);

}  // namespace isodiff::susy
