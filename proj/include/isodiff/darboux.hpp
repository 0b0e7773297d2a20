#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "isodiff/numerics.hpp"
#include "isodiff/susy.hpp"

// Double Darboux (strictly isospectral) deformation of the bosonic potential.
// For a nodeless zero-energy seed psi with I(rho) = int_0^rho psi^2,
//
//   V_iso = V_B - 2 (ln(I + lambda))''
//   psi_iso = sqrt(lambda (lambda + 1)) psi / (I + lambda)
//
// Derivatives of ln(I + lambda) are always taken in closed form, using
// I' = psi^2. lambda = infinity is an exact sentinel that returns the
// undeformed bosonic quantities.

namespace isodiff::darboux {

/// Family parameter: a finite positive real or the infinite sentinel.
class Lambda {
 public:
  static Lambda infinite() { return Lambda(); }
  static Lambda finite(double value);
  /// Accepts "inf" or a positive decimal; throws std::invalid_argument otherwise.
  static Lambda parse(const std::string& text);

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error for the infinite sentinel.
  double value() const;
  /// "inf", or the shortest fixed-notation decimal that round-trips.
  std::string label() const;

  friend bool operator==(const Lambda&, const Lambda&) = default;

 private:
  Lambda() = default;
  explicit Lambda(double v) : value_(v) {}
  std::optional<double> value_;
};

/// Default tabulation range for I(rho): 2000 log-spaced points on [0.01, 40].
numerics::RadialGrid default_working_grid();

/// I(rho_i) for the seed's psi^2 on the given grid. The table does not depend
/// on lambda and is meant to be shared by every family member.
std::shared_ptr<const numerics::CumulativeNorm> build_norm(const susy::SchrodingerProfile& p,
                                                          const numerics::RadialGrid& grid);

class DarbouxFamily {
 public:
  DarbouxFamily(susy::SchrodingerProfile profile,
                std::shared_ptr<const numerics::CumulativeNorm> norm, Lambda lambda);

  const susy::SchrodingerProfile& profile() const { return profile_; }
  const numerics::CumulativeNorm& norm() const { return *norm_; }
  const std::shared_ptr<const numerics::CumulativeNorm>& shared_norm() const { return norm_; }
  Lambda lambda() const { return lambda_; }

  /// Same seed and table, different lambda.
  DarbouxFamily with_lambda(Lambda lambda) const { return {profile_, norm_, lambda}; }

  /// I(rho). Throws std::out_of_range outside the tabulated range.
  double cumulative(double rho) const;

 private:
  susy::SchrodingerProfile profile_;
  std::shared_ptr<const numerics::CumulativeNorm> norm_;
  Lambda lambda_;
};

/// ln(I + lambda) and its first two derivatives. Finite lambda only.
double log_norm(const DarbouxFamily& fam, double rho);
double log_norm_prime(const DarbouxFamily& fam, double rho);
double log_norm_second(const DarbouxFamily& fam, double rho);

double v_iso(const DarbouxFamily& fam, double rho);
double psi_iso(const DarbouxFamily& fam, double rho);

/// W_gen = -(ln psi_iso)' = W + psi^2/(I + lambda).
double w_gen(const DarbouxFamily& fam, double rho);
double w_gen_prime(const DarbouxFamily& fam, double rho);

/// Signed bracket k^2 - 2 (ln(I + lambda))''. Negative inside the well, where
/// the effective diffusion length is not real.
double k_eff_squared(const DarbouxFamily& fam, double rho);

/// psi_iso / sqrt(rho). Not normalized by S0/(2 pi D).
double flux_iso(const DarbouxFamily& fam, double rho);

/// Location of the deepest strict interior local minimum of a sampled curve.
/// Endpoints never qualify, so the 1/rho^2 plunge at the origin is ignored.
std::optional<double> find_well(std::span<const double> rho, std::span<const double> values);

}  // namespace isodiff::darboux
