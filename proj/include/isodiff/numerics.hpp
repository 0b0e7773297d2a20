#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace isodiff::numerics {

using RealFunction = std::function<double(double)>;

/// Strictly increasing, strictly positive abscissas (at least two).
class RadialGrid {
 public:
  explicit RadialGrid(std::vector<double> points);

  static RadialGrid log_spaced(double rho_min, double rho_max, std::size_t count);
  static RadialGrid linear(double rho_min, double rho_max, std::size_t count);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }

  double min_spacing() const;
  bool covers(double rho) const { return rho >= front() && rho <= back(); }

  /// Points with rho >= rho_min, keeping the original order.
  RadialGrid restricted_from(double rho_min) const;

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

 private:
  std::vector<double> points_;
};

/// Tabulated running integral I(rho_i) = int_0^{rho_i} f(r) dr.
struct CumulativeNorm {
  RadialGrid grid;
  std::vector<double> values;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(std::size_t order);

/// Integral of f over [a, b] with the fixed per-panel rule used everywhere
/// in this library.
double panel_integral(const RealFunction& f, double a, double b);

/// Integral of f over (0, b] on a geometrically graded mesh (ratio 1/2,
/// 40 levels). The innermost remainder (0, b 2^-40] is estimated from the
/// power-law hint f(r) ~ r^p, which must satisfy p > -1.
double graded_origin_integral(const RealFunction& f, double b, double small_rho_exponent_hint);

/// Running integral of a non-negative integrand along the grid.
/// Throws std::domain_error for a hint <= -1 and for samples below -1e-14.
CumulativeNorm cumulative_integral(const RealFunction& f, const RadialGrid& grid,
                                   double small_rho_exponent_hint);

/// I(rho) at an arbitrary rho inside the tabulated range: the nearest
/// tabulated value at or below rho plus a single panel integral of f.
/// f must be the integrand the table was built from.
double cumulative_at(const CumulativeNorm& norm, const RealFunction& f, double rho);

/// (f(rho+h) - 2 f(rho) + f(rho-h)) / h^2. Requires h > 0 and rho - h > 0.
double second_derivative_fd(const RealFunction& f, double rho, double h);

/// (f(rho+h) - f(rho-h)) / (2h). Requires h > 0 and rho - h > 0.
double first_derivative_fd(const RealFunction& f, double rho, double h);

/// log2(coarse / fine) for errors measured at steps h and h/2.
double observed_order(double coarse_error, double fine_error);

}  // namespace isodiff::numerics
