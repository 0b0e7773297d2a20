#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isodiff/darboux.hpp"
#include "isodiff/numerics.hpp"

namespace isodiff::cli {

enum class Quantity {
  potential_bosonic,
  potential_fermionic,
  potential_iso,
  psi,
  psi_iso,
  flux,
  flux_iso,
  k_eff_squared,
  superpotential,
  w_gen,
  cumulative_norm,
};

std::string to_string(Quantity q);
std::optional<Quantity> parse_quantity(const std::string& name);

/// True for quantities that depend on the family parameter.
bool is_family_quantity(Quantity q);

/// Label used for quantities with no lambda dependence.
inline constexpr const char* no_lambda_label = "none";

/// Rows of (rho, value) for one quantity at one lambda.
struct ProfileSeries {
  Quantity quantity;
  std::string lambda_label;
  std::vector<std::pair<double, double>> rows;
};

/// Throws std::runtime_error on unsorted rows, non-finite values, or an
/// "inf" label on a quantity without a bosonic limit.
void validate(const ProfileSeries& s);

enum class Spacing { log, linear };
enum class Format { csv, json };

struct SeriesOptions {
  double k = 1.0;
  double a1 = 1.0;
  double a2 = 1.0;
  std::vector<darboux::Lambda> lambdas;
  double rho_min = 0.05;
  double rho_max = 8.0;
  std::size_t points = 400;
  Spacing spacing = Spacing::log;
};

/// Figure defaults: lambda in {inf, 1, 1000, 3000, 6000}.
std::vector<darboux::Lambda> figure_lambdas();

numerics::RadialGrid sample_grid(const SeriesOptions& opt);

/// Tabulation grid for I(rho): log-spaced, 2000 points, from
/// min(0.01, rho_min) to rho_max.
numerics::RadialGrid working_grid_for(const SeriesOptions& opt);

/// One series per lambda for family quantities, a single series otherwise.
std::vector<ProfileSeries> make_series(Quantity q, const SeriesOptions& opt);

void write_csv(const ProfileSeries& s, std::ostream& out);
void write_json(const ProfileSeries& s, const SeriesOptions& opt, std::ostream& out);

/// "<stem>_lambda_<label>.<csv|json>"
std::string series_filename(const std::string& stem, const ProfileSeries& s, Format f);

/// Entry point shared by the executable and the tests. Returns the exit code:
/// 0 success, 1 verification failure or runtime error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isodiff::cli
