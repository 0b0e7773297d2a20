#include "isodiff/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace isodiff::numerics {
namespace {

constexpr std::size_t kPanelOrder = 20;
constexpr int kGradedLevels = 40;
constexpr double kNegativeSampleTolerance = -1e-14;

const GaussRule& panel_rule() {
  static const GaussRule rule = gauss_legendre(kPanelOrder);
  return rule;
}

void check_stencil(double rho, double h, const char* fn) {
  if (!std::isfinite(rho) || !std::isfinite(h) || !(h > 0.0) || !(rho - h > 0.0)) {
    throw std::domain_error(std::string(fn) + ": stencil must stay inside (0, inf)");
  }
}

// Same rule as panel_integral, but rejects negative samples.
double checked_panel(const RealFunction& f, double a, double b) {
  const auto& rule = panel_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double value = f(mid + half * rule.nodes[i]);
    if (value < kNegativeSampleTolerance) {
      throw std::domain_error("cumulative_integral: negative integrand sample");
    }
    sum += rule.weights[i] * value;
  }
  return half * sum;
}

}  // namespace

RadialGrid::RadialGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("RadialGrid: need at least two points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double p = points_[i];
    if (!std::isfinite(p) || p <= 0.0) {
      throw std::invalid_argument("RadialGrid: points must be finite and positive");
    }
    if (i > 0 && !(p > points_[i - 1])) {
      throw std::invalid_argument("RadialGrid: points must be strictly increasing");
    }
  }
}

RadialGrid RadialGrid::log_spaced(double rho_min, double rho_max, std::size_t count) {
  if (!(rho_min > 0.0) || !(rho_max > rho_min) || count < 2) {
    throw std::invalid_argument("RadialGrid::log_spaced: need 0 < min < max and count >= 2");
  }
  std::vector<double> pts(count);
  const double lo = std::log(rho_min);
  const double step = (std::log(rho_max) - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) pts[i] = std::exp(lo + step * static_cast<double>(i));
  pts.front() = rho_min;
  pts.back() = rho_max;
  return RadialGrid(std::move(pts));
}

RadialGrid RadialGrid::linear(double rho_min, double rho_max, std::size_t count) {
  if (!(rho_min > 0.0) || !(rho_max > rho_min) || count < 2) {
    throw std::invalid_argument("RadialGrid::linear: need 0 < min < max and count >= 2");
  }
  std::vector<double> pts(count);
  const double step = (rho_max - rho_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) pts[i] = rho_min + step * static_cast<double>(i);
  pts.back() = rho_max;
  return RadialGrid(std::move(pts));
}

double RadialGrid::min_spacing() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < points_.size(); ++i) best = std::min(best, points_[i] - points_[i - 1]);
  return best;
}

RadialGrid RadialGrid::restricted_from(double rho_min) const {
  std::vector<double> kept;
  std::copy_if(points_.begin(), points_.end(), std::back_inserter(kept),
               [rho_min](double p) { return p >= rho_min; });
  return RadialGrid(std::move(kept));
}

GaussRule gauss_legendre(std::size_t order) {
  if (order == 0) throw std::invalid_argument("gauss_legendre: order must be positive");
  GaussRule rule{std::vector<double>(order), std::vector<double>(order)};
  const std::size_t half = (order + 1) / 2;
  const double n = static_cast<double>(order);
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= order; ++j) {
        const double p2 = p1;
        p1 = p0;
        const double jd = static_cast<double>(j);
        p0 = ((2.0 * jd - 1.0) * z * p1 - (jd - 1.0) * p2) / jd;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

double panel_integral(const RealFunction& f, double a, double b) {
  const auto& rule = panel_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

double graded_origin_integral(const RealFunction& f, double b, double small_rho_exponent_hint) {
  if (!(small_rho_exponent_hint > -1.0)) {
    throw std::domain_error("cumulative_integral: exponent hint must exceed -1");
  }
  // Accumulate innermost panels first so small contributions are not lost.
  double lower = std::ldexp(b, -kGradedLevels);
  const double sample = f(lower);
  double sum = std::isfinite(sample) ? sample * lower / (small_rho_exponent_hint + 1.0) : 0.0;
  for (int level = kGradedLevels - 1; level >= 0; --level) {
    const double upper = std::ldexp(b, -level);
    sum += checked_panel(f, lower, upper);
    lower = upper;
  }
  return sum;
}

CumulativeNorm cumulative_integral(const RealFunction& f, const RadialGrid& grid,
                                   double small_rho_exponent_hint) {
  std::vector<double> values(grid.size());
  double running = graded_origin_integral(f, grid.front(), small_rho_exponent_hint);
  values[0] = running;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    running += checked_panel(f, grid[i - 1], grid[i]);
    values[i] = running;
  }
  return CumulativeNorm{grid, std::move(values)};
}

double cumulative_at(const CumulativeNorm& norm, const RealFunction& f, double rho) {
  const auto pts = norm.grid.points();
  if (!std::isfinite(rho) || !norm.grid.covers(rho)) {
    throw std::out_of_range("cumulative_at: rho outside the tabulated range");
  }
  const auto it = std::upper_bound(pts.begin(), pts.end(), rho);
  const auto index = static_cast<std::size_t>(std::distance(pts.begin(), it)) - 1;
  const double base = pts[index];
  if (rho == base) return norm.values[index];
  return norm.values[index] + panel_integral(f, base, rho);
}

double second_derivative_fd(const RealFunction& f, double rho, double h) {
  check_stencil(rho, h, "second_derivative_fd");
  return (f(rho + h) - 2.0 * f(rho) + f(rho - h)) / (h * h);
}

double first_derivative_fd(const RealFunction& f, double rho, double h) {
  check_stencil(rho, h, "first_derivative_fd");
  return (f(rho + h) - f(rho - h)) / (2.0 * h);
}

double observed_order(double coarse_error, double fine_error) {
  if (!(coarse_error > 0.0) || !(fine_error > 0.0)) return std::numeric_limits<double>::infinity();
  return std::log2(coarse_error / fine_error);
}

}  // namespace isodiff::numerics
