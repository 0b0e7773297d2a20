#include "isodiff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace isodiff::verify {
namespace {

using numerics::RadialGrid;
using Residual = std::function<double(double rho, double h)>;

double potential_scale(double rho, double k) { return k * k + 1.0 / (4.0 * rho * rho); }

double max_scaled_residual(const RadialGrid& grid, double k, double h, const Residual& residual) {
  double worst = 0.0;
  for (const double rho : grid.points()) {
    worst = std::max(worst, std::abs(residual(rho, h)) / potential_scale(rho, k));
  }
  return worst;
}

ResidualReport fd_check(std::string name, const RadialGrid& grid, double k, const Residual& residual) {
  const RadialGrid active = grid.restricted_from(fd_exclusion_radius);
  const double h = active.min_spacing();
  const double coarse = max_scaled_residual(active, k, h, residual);
  const double fine = max_scaled_residual(active, k, 0.5 * h, residual);
  ResidualReport report;
  report.check_name = std::move(name);
  report.grid = active;
  report.max_abs_residual = coarse;
  report.tolerance = fd_constant * h * h;
  report.observed_convergence_order = numerics::observed_order(coarse, fine);
  report.passed = coarse <= report.tolerance;
  return report;
}

template <typename Pointwise>
ResidualReport closed_form_check(std::string name, const RadialGrid& grid, double tolerance,
                                 Pointwise&& pointwise) {
  double worst = 0.0;
  for (const double rho : grid.points()) worst = std::max(worst, std::abs(pointwise(rho)));
  ResidualReport report;
  report.check_name = std::move(name);
  report.grid = grid;
  report.max_abs_residual = worst;
  report.tolerance = tolerance;
  report.passed = worst <= tolerance;
  return report;
}

std::string tagged(const std::string& name, const darboux::DarbouxFamily& fam) {
  return name + "[lambda=" + fam.lambda().label() + "]";
}

}  // namespace

void to_json(nlohmann::json& j, const ResidualReport& r) {
  j = nlohmann::json{{"check", r.check_name},
                     {"max_abs_residual", r.max_abs_residual},
                     {"tolerance", r.tolerance},
                     {"passed", r.passed}};
  j["observed_order"] = r.observed_convergence_order ? nlohmann::json(*r.observed_convergence_order)
                                                     : nlohmann::json(nullptr);
  if (r.grid) {
    j["grid"] = {{"rho_min", r.grid->front()}, {"rho_max", r.grid->back()}, {"points", r.grid->size()}};
  } else {
    j["grid"] = nullptr;
  }
}

ResidualReport check_riccati(const susy::SchrodingerProfile& p, const RadialGrid& grid) {
  const auto w = [&p](double r) { return susy::superpotential(p, r); };
  return fd_check("riccati", grid, p.k(), [&](double rho, double h) {
    const double wv = w(rho);
    return wv * wv - numerics::first_derivative_fd(w, rho, h) - susy::potential_bosonic(rho, p.k());
  });
}

ResidualReport check_zero_mode(const susy::SchrodingerProfile& p, const RadialGrid& grid,
                               const PotentialFn& potential) {
  const auto f = [&p](double r) { return susy::psi(p, r); };
  return fd_check("zero_mode", grid, p.k(), [&](double rho, double h) {
    return numerics::second_derivative_fd(f, rho, h) / f(rho) - potential(rho, p.k());
  });
}

ResidualReport check_annihilation(const susy::SchrodingerProfile& p, const RadialGrid& grid) {
  return closed_form_check("annihilation", grid, 1e-10, [&p](double rho) {
    const double f = susy::psi(p, rho);
    const double df = susy::psi_prime(p, rho);
    const double scale = std::abs(df) + std::abs(susy::superpotential(p, rho) * f);
    return susy::apply_a1(p, f, df, rho) / scale;
  });
}

ResidualReport check_partner_relation(const susy::SchrodingerProfile& p, const RadialGrid& grid) {
  return closed_form_check("partner_relation", grid, 1e-12, [&p](double rho) {
    const double lhs = susy::potential_fermionic(p, rho) - susy::potential_bosonic(rho, p.k());
    const double rhs = 2.0 * susy::superpotential_prime(p, rho);
    return (lhs - rhs) / potential_scale(rho, p.k());
  });
}

ResidualReport check_isospectral(const darboux::DarbouxFamily& fam, const RadialGrid& grid) {
  const auto f = [&fam](double r) { return darboux::psi_iso(fam, r); };
  return fd_check(tagged("isospectral", fam), grid, fam.profile().k(), [&](double rho, double h) {
    return numerics::second_derivative_fd(f, rho, h) / f(rho) - darboux::v_iso(fam, rho);
  });
}

ResidualReport check_log_form(const darboux::DarbouxFamily& fam, const RadialGrid& grid) {
  const double k = fam.profile().k();
  const auto ln = [&fam](double r) { return darboux::log_norm(fam, r); };
  return fd_check(tagged("log_form", fam), grid, k, [&](double rho, double h) {
    const double vb = susy::potential_bosonic(rho, k);
    const double log_form = fam.lambda().is_infinite() ? vb : vb - 2.0 * numerics::second_derivative_fd(ln, rho, h);
    return log_form - darboux::v_iso(fam, rho);
  });
}

ResidualReport check_effective_radial(const darboux::DarbouxFamily& fam, const RadialGrid& grid) {
  const auto phi = [&fam](double r) { return darboux::flux_iso(fam, r); };
  return fd_check(tagged("effective_radial", fam), grid, fam.profile().k(), [&](double rho, double h) {
    const double value = phi(rho);
    const double lhs = rho * rho * numerics::second_derivative_fd(phi, rho, h) +
                       rho * numerics::first_derivative_fd(phi, rho, h) -
                       rho * rho * darboux::k_eff_squared(fam, rho) * value;
    return lhs / (rho * rho * value);
  });
}

ResidualReport check_keff_identity(const darboux::DarbouxFamily& fam, const RadialGrid& grid) {
  return closed_form_check(tagged("keff_identity", fam), grid, 1e-12, [&fam](double rho) {
    return darboux::k_eff_squared(fam, rho) - darboux::v_iso(fam, rho) - 1.0 / (4.0 * rho * rho);
  });
}

ResidualReport check_wgen_closure(const darboux::DarbouxFamily& fam, const RadialGrid& grid) {
  const double k = fam.profile().k();
  return closed_form_check(tagged("wgen_closure", fam), grid, closed_form_tolerance, [&](double rho) {
    const double w = darboux::w_gen(fam, rho);
    const double dw = darboux::w_gen_prime(fam, rho);
    const double bosonic = w * w - dw - darboux::v_iso(fam, rho);
    const double fermionic = w * w + dw - susy::potential_fermionic(fam.profile(), rho);
    return std::max(std::abs(bosonic), std::abs(fermionic)) / potential_scale(rho, k);
  });
}

ResidualReport check_pillbox(const model::Medium& m, const model::LineSource& s) {
  const double rho = 1e-6 / model::inverse_diffusion_length(m);
  ResidualReport report;
  report.check_name = "pillbox";
  report.max_abs_residual = std::abs(model::pillbox_flow(rho, m, s) - s.s0());
  report.tolerance = 1e-8 * s.s0();
  report.passed = report.max_abs_residual <= report.tolerance;
  return report;
}

ResidualReport check_lambda_recovery(const darboux::DarbouxFamily& fam, const RadialGrid& grid) {
  const double k = fam.profile().k();
  double vb_max = 0.0;
  for (const double rho : grid.points()) {
    vb_max = std::max(vb_max, std::abs(susy::potential_bosonic(rho, k)));
  }
  return closed_form_check(tagged("lambda_recovery", fam), grid, 1e-5 * vb_max, [&](double rho) {
    return darboux::v_iso(fam, rho) - susy::potential_bosonic(rho, k);
  });
}

bool SuiteResult::all_passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

SuiteResult run_suite(const SuiteConfig& config) {
  const susy::SchrodingerProfile profile(config.k, config.coefficients);
  SuiteResult result;
  auto& out = result.reports;
  out.push_back(check_riccati(profile, config.check_grid));
  out.push_back(check_zero_mode(profile, config.check_grid));
  out.push_back(check_annihilation(profile, config.check_grid));
  out.push_back(check_partner_relation(profile, config.check_grid));
  out.push_back(check_pillbox(config.medium, config.source));

  const auto norm = darboux::build_norm(profile, config.working_grid);
  const darboux::DarbouxFamily base(profile, norm, config.recovery_lambda);
  out.push_back(check_lambda_recovery(base, config.recovery_grid));

  for (const auto& lambda : config.lambdas) {
    const auto fam = base.with_lambda(lambda);
    out.push_back(check_log_form(fam, config.check_grid));
    out.push_back(check_isospectral(fam, config.check_grid));
    out.push_back(check_effective_radial(fam, config.check_grid));
    out.push_back(check_keff_identity(fam, config.check_grid));
    out.push_back(check_wgen_closure(fam, config.check_grid));
  }
  return result;
}

}  // namespace isodiff::verify
