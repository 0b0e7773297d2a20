#include "isodiff/darboux.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace isodiff::darboux {
namespace {

void require_radius(double rho, const char* fn) {
  if (!std::isfinite(rho) || rho <= 0.0) {
    throw std::domain_error(std::string(fn) + ": rho must be finite and > 0");
  }
}

double finite_lambda(const DarbouxFamily& fam, const char* fn) {
  if (fam.lambda().is_infinite()) {
    throw std::domain_error(std::string(fn) + ": undefined for lambda = inf");
  }
  return fam.lambda().value();
}

}  // namespace

Lambda Lambda::finite(double value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument("Lambda: family parameter must be finite and > 0");
  }
  return Lambda(value);
}

Lambda Lambda::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinite();
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("Lambda: cannot parse '" + text + "'");
  }
  return finite(value);
}

double Lambda::value() const {
  if (!value_) throw std::logic_error("Lambda: infinite sentinel has no finite value");
  return *value_;
}

std::string Lambda::label() const {
  if (!value_) return "inf";
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), *value_, std::chars_format::fixed);
  if (ec != std::errc()) return std::to_string(*value_);
  return std::string(buf, ptr);
}

numerics::RadialGrid default_working_grid() {
  return numerics::RadialGrid::log_spaced(0.01, 40.0, 2000);
}

std::shared_ptr<const numerics::CumulativeNorm> build_norm(const susy::SchrodingerProfile& p,
                                                          const numerics::RadialGrid& grid) {
  // psi^2 ~ rho ln^2(rho) near the origin.
  const auto integrand = [&p](double r) {
    const double v = susy::psi(p, r);
    return v * v;
  };
  return std::make_shared<const numerics::CumulativeNorm>(
      numerics::cumulative_integral(integrand, grid, 1.0));
}

DarbouxFamily::DarbouxFamily(susy::SchrodingerProfile profile,
                             std::shared_ptr<const numerics::CumulativeNorm> norm, Lambda lambda)
    : profile_(profile), norm_(std::move(norm)), lambda_(lambda) {
  if (!norm_) throw std::invalid_argument("DarbouxFamily: missing cumulative table");
}

double DarbouxFamily::cumulative(double rho) const {
  require_radius(rho, "cumulative");
  const auto integrand = [this](double r) {
    const double v = susy::psi(profile_, r);
    return v * v;
  };
  return numerics::cumulative_at(*norm_, integrand, rho);
}

double log_norm(const DarbouxFamily& fam, double rho) {
  const double lambda = finite_lambda(fam, "log_norm");
  return std::log(fam.cumulative(rho) + lambda);
}

double log_norm_prime(const DarbouxFamily& fam, double rho) {
  const double lambda = finite_lambda(fam, "log_norm_prime");
  const double s = fam.cumulative(rho) + lambda;
  const double v = susy::psi(fam.profile(), rho);
  return v * v / s;
}

double log_norm_second(const DarbouxFamily& fam, double rho) {
  const double lambda = finite_lambda(fam, "log_norm_second");
  const double s = fam.cumulative(rho) + lambda;
  const double v = susy::psi(fam.profile(), rho);
  const double dv = susy::psi_prime(fam.profile(), rho);
  const double u = v * v / s;
  return 2.0 * v * dv / s - u * u;
}

double v_iso(const DarbouxFamily& fam, double rho) {
  require_radius(rho, "v_iso");
  const double vb = susy::potential_bosonic(rho, fam.profile().k());
  if (fam.lambda().is_infinite()) return vb;
  return vb - 2.0 * log_norm_second(fam, rho);
}

double psi_iso(const DarbouxFamily& fam, double rho) {
  require_radius(rho, "psi_iso");
  const double v = susy::psi(fam.profile(), rho);
  if (fam.lambda().is_infinite()) return v;
  const double lambda = fam.lambda().value();
  return std::sqrt(lambda * (lambda + 1.0)) * v / (fam.cumulative(rho) + lambda);
}

double w_gen(const DarbouxFamily& fam, double rho) {
  require_radius(rho, "w_gen");
  const double w = susy::superpotential(fam.profile(), rho);
  if (fam.lambda().is_infinite()) return w;
  return w + log_norm_prime(fam, rho);
}

double w_gen_prime(const DarbouxFamily& fam, double rho) {
  require_radius(rho, "w_gen_prime");
  const double dw = susy::superpotential_prime(fam.profile(), rho);
  if (fam.lambda().is_infinite()) return dw;
  return dw + log_norm_second(fam, rho);
}

double k_eff_squared(const DarbouxFamily& fam, double rho) {
  require_radius(rho, "k_eff_squared");
  const double k = fam.profile().k();
  if (fam.lambda().is_infinite()) return k * k;
  return k * k - 2.0 * log_norm_second(fam, rho);
}

double flux_iso(const DarbouxFamily& fam, double rho) {
  return psi_iso(fam, rho) / std::sqrt(rho);
}

std::optional<double> find_well(std::span<const double> rho, std::span<const double> values) {
  if (rho.size() != values.size()) throw std::invalid_argument("find_well: size mismatch");
  std::optional<double> where;
  double depth = 0.0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i] < values[i - 1] && values[i] < values[i + 1] && (!where || values[i] < depth)) {
      where = rho[i];
      depth = values[i];
    }
  }
  return where;
}

}  // namespace isodiff::darboux
