#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isodiff/darboux.hpp"
#include "isodiff/model.hpp"
#include "isodiff/numerics.hpp"
#include "isodiff/susy.hpp"

// Named identity checks. Each returns a ResidualReport and never throws
// because a check failed; invalid inputs (bad grids, rho outside coverage)
// still throw.
//
// Finite-difference checks:
//   * skip grid points below fd_exclusion_radius,
//   * use the step h = smallest spacing of the remaining grid,
//   * measure residuals in potential units divided by k^2 + 1/(4 rho^2),
//   * rerun at h/2 to report the observed convergence order,
//   * pass when the step-h residual is within fd_constant * h^2.

namespace isodiff::verify {

inline constexpr double fd_exclusion_radius = 0.1;
inline constexpr double fd_constant = 1000.0;
inline constexpr double closed_form_tolerance = 1e-8;

struct ResidualReport {
  std::string check_name;
  std::optional<numerics::RadialGrid> grid;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> observed_convergence_order;
  bool passed = false;
};

void to_json(nlohmann::json& j, const ResidualReport& r);

/// Bosonic Riccati equation with an FD derivative of the analytic W.
ResidualReport check_riccati(const susy::SchrodingerProfile& p, const numerics::RadialGrid& grid);

using PotentialFn = std::function<double(double rho, double k)>;

/// FD psi'' against V psi. V defaults to the bosonic potential; another
/// potential can be passed as a negative control.
ResidualReport check_zero_mode(const susy::SchrodingerProfile& p, const numerics::RadialGrid& grid,
                               const PotentialFn& potential = susy::potential_bosonic);

/// |A1 psi| relative to |psi'| + |W psi|, tolerance 1e-10.
ResidualReport check_annihilation(const susy::SchrodingerProfile& p, const numerics::RadialGrid& grid);

/// V_F - V_B = 2 W' in closed form, tolerance 1e-12 relative to the scale.
ResidualReport check_partner_relation(const susy::SchrodingerProfile& p,
                                      const numerics::RadialGrid& grid);

/// FD psi_iso'' against V_iso psi_iso.
ResidualReport check_isospectral(const darboux::DarbouxFamily& fam, const numerics::RadialGrid& grid);

/// V_B - 2 FD[ln(I + lambda)]'' against the closed-form V_iso.
ResidualReport check_log_form(const darboux::DarbouxFamily& fam, const numerics::RadialGrid& grid);

/// rho^2 phi'' + rho phi' - rho^2 k_eff^2 phi = 0 for phi = flux_iso, FD derivatives.
ResidualReport check_effective_radial(const darboux::DarbouxFamily& fam,
                                      const numerics::RadialGrid& grid);

/// k_eff^2 - V_iso = 1/(4 rho^2) in closed form, tolerance 1e-12 absolute.
ResidualReport check_keff_identity(const darboux::DarbouxFamily& fam,
                                   const numerics::RadialGrid& grid);

/// W_gen closes both Riccati forms: W_gen^2 - W_gen' = V_iso and
/// W_gen^2 + W_gen' = V_F (the family's common partner).
ResidualReport check_wgen_closure(const darboux::DarbouxFamily& fam,
                                  const numerics::RadialGrid& grid);

/// Source normalization: |pillbox_flow(1e-6/k) - S0| within 1e-8 S0.
ResidualReport check_pillbox(const model::Medium& m, const model::LineSource& s);

/// max |V_iso - V_B| within 1e-5 max |V_B| on the grid.
ResidualReport check_lambda_recovery(const darboux::DarbouxFamily& fam,
                                     const numerics::RadialGrid& grid);

struct SuiteConfig {
  double k = 1.0;
  model::Superposition coefficients{1.0, 1.0};
  std::vector<darboux::Lambda> lambdas{darboux::Lambda::finite(1.0), darboux::Lambda::finite(1000.0),
                                       darboux::Lambda::finite(3000.0),
                                       darboux::Lambda::finite(6000.0)};
  numerics::RadialGrid check_grid = numerics::RadialGrid::log_spaced(0.1, 10.0, 400);
  numerics::RadialGrid working_grid = darboux::default_working_grid();
  numerics::RadialGrid recovery_grid = numerics::RadialGrid::log_spaced(0.05, 8.0, 400);
  darboux::Lambda recovery_lambda = darboux::Lambda::finite(1e10);
  model::Medium medium{1.0, 1.0, 1.0};
  model::LineSource source{1.0};
};

struct SuiteResult {
  std::vector<ResidualReport> reports;
  bool all_passed() const;
};

/// Runs the lambda-independent checks, then the per-lambda checks in the
/// order of config.lambdas. A failing check never stops the run.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace isodiff::verify
