#include "isodiff/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "isodiff/model.hpp"
#include "isodiff/susy.hpp"
#include "isodiff/verify.hpp"

namespace isodiff::cli {
namespace {

struct QuantityName {
  Quantity quantity;
  const char* name;
};

constexpr std::array<QuantityName, 11> kQuantityNames{{
    {Quantity::potential_bosonic, "potential_bosonic"},
    {Quantity::potential_fermionic, "potential_fermionic"},
    {Quantity::potential_iso, "potential_iso"},
    {Quantity::psi, "psi"},
    {Quantity::psi_iso, "psi_iso"},
    {Quantity::flux, "flux"},
    {Quantity::flux_iso, "flux_iso"},
    {Quantity::k_eff_squared, "k_eff_squared"},
    {Quantity::superpotential, "superpotential"},
    {Quantity::w_gen, "w_gen"},
    {Quantity::cumulative_norm, "cumulative_norm"},
}};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("cannot format value");
  return std::string(buf.data(), ptr);
}

double evaluate(Quantity q, const darboux::DarbouxFamily& fam, double rho) {
  const auto& p = fam.profile();
  switch (q) {
    case Quantity::potential_bosonic: return susy::potential_bosonic(rho, p.k());
    case Quantity::potential_fermionic: return susy::potential_fermionic(p, rho);
    case Quantity::potential_iso: return darboux::v_iso(fam, rho);
    case Quantity::psi: return susy::psi(p, rho);
    case Quantity::psi_iso: return darboux::psi_iso(fam, rho);
    case Quantity::flux: return model::flux_general(rho, p.k(), p.coefficients());
    case Quantity::flux_iso: return darboux::flux_iso(fam, rho);
    case Quantity::k_eff_squared: return darboux::k_eff_squared(fam, rho);
    case Quantity::superpotential: return susy::superpotential(p, rho);
    case Quantity::w_gen: return darboux::w_gen(fam, rho);
    case Quantity::cumulative_norm: return fam.cumulative(rho);
  }
  throw std::logic_error("unknown quantity");
}

struct FigureFlags {
  double k = 1.0;
  double a1 = 1.0;
  double a2 = 1.0;
  std::vector<std::string> lambdas;
  double rho_min = 0.05;
  double rho_max = 8.0;
  long long points = 400;
  std::string spacing = "log";
  std::string format = "csv";
  std::string out = ".";
  std::string quantity;
};

void add_shape_flags(CLI::App& cmd, FigureFlags& f) {
  cmd.add_option("--k", f.k, "Inverse diffusion length k")->capture_default_str();
  cmd.add_option("--a1", f.a1, "Coefficient of I0")->capture_default_str();
  cmd.add_option("--a2", f.a2, "Coefficient of K0")->capture_default_str();
  cmd.add_option("--lambda", f.lambdas, "Family parameter, positive number or 'inf' (repeatable)")
      ->allow_extra_args(false);
}

void add_figure_flags(CLI::App& cmd, FigureFlags& f) {
  add_shape_flags(cmd, f);
  cmd.add_option("--rho-min", f.rho_min, "Smallest radius")->capture_default_str();
  cmd.add_option("--rho-max", f.rho_max, "Largest radius")->capture_default_str();
  cmd.add_option("--points", f.points, "Number of samples")->capture_default_str();
  cmd.add_option("--spacing", f.spacing, "Sample spacing")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  cmd.add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--out", f.out, "Output directory")->capture_default_str();
}

std::vector<darboux::Lambda> parse_lambdas(const std::vector<std::string>& texts) {
  std::vector<darboux::Lambda> out;
  for (const auto& t : texts) {
    try {
      out.push_back(darboux::Lambda::parse(t));
    } catch (const std::invalid_argument&) {
      throw UsageError("--lambda must be a positive number or 'inf', got '" + t + "'");
    }
  }
  return out;
}

SeriesOptions to_options(const FigureFlags& f, std::vector<darboux::Lambda> default_lambdas) {
  if (!std::isfinite(f.k) || f.k <= 0.0) throw UsageError("--k must be > 0");
  try {
    model::Superposition(f.a1, f.a2);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!std::isfinite(f.rho_min) || f.rho_min <= 0.0) throw UsageError("--rho-min must be > 0");
  if (!std::isfinite(f.rho_max) || f.rho_max <= f.rho_min) {
    throw UsageError("--rho-max must exceed --rho-min");
  }
  if (f.points < 2) throw UsageError("--points must be at least 2");
  SeriesOptions opt;
  opt.k = f.k;
  opt.a1 = f.a1;
  opt.a2 = f.a2;
  opt.lambdas = f.lambdas.empty() ? std::move(default_lambdas) : parse_lambdas(f.lambdas);
  opt.rho_min = f.rho_min;
  opt.rho_max = f.rho_max;
  opt.points = static_cast<std::size_t>(f.points);
  opt.spacing = f.spacing == "linear" ? Spacing::linear : Spacing::log;
  return opt;
}

int emit(const std::string& stem, Quantity q, const FigureFlags& flags, const SeriesOptions& opt,
         std::ostream& out) {
  const Format format = flags.format == "json" ? Format::json : Format::csv;
  const auto series = make_series(q, opt);
  for (const auto& s : series) validate(s);

  const std::filesystem::path dir(flags.out);
  std::filesystem::create_directories(dir);
  for (const auto& s : series) {
    const auto path = dir / series_filename(stem, s, format);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path.string());
    if (format == Format::json) {
      write_json(s, opt, file);
    } else {
      write_csv(s, file);
    }
    if (!file) throw std::runtime_error("failed writing " + path.string());
    out << path.string() << '\n';
  }
  return 0;
}

}  // namespace

std::string to_string(Quantity q) {
  for (const auto& entry : kQuantityNames) {
    if (entry.quantity == q) return entry.name;
  }
  throw std::logic_error("unknown quantity");
}

std::optional<Quantity> parse_quantity(const std::string& name) {
  for (const auto& entry : kQuantityNames) {
    if (name == entry.name) return entry.quantity;
  }
  return std::nullopt;
}

bool is_family_quantity(Quantity q) {
  switch (q) {
    case Quantity::potential_iso:
    case Quantity::psi_iso:
    case Quantity::flux_iso:
    case Quantity::k_eff_squared:
    case Quantity::w_gen:
      return true;
    default:
      return false;
  }
}

void validate(const ProfileSeries& s) {
  if (s.lambda_label == "inf" && !is_family_quantity(s.quantity)) {
    throw std::runtime_error(to_string(s.quantity) + ": 'inf' label on a lambda-free quantity");
  }
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto [rho, value] = s.rows[i];
    if (!std::isfinite(rho) || !std::isfinite(value)) {
      throw std::runtime_error(to_string(s.quantity) + " lambda=" + s.lambda_label +
                               ": non-finite value at row " + std::to_string(i));
    }
    if (i > 0 && !(rho > s.rows[i - 1].first)) {
      throw std::runtime_error(to_string(s.quantity) + ": rows not strictly increasing in rho");
    }
  }
}

std::vector<darboux::Lambda> figure_lambdas() {
  using darboux::Lambda;
  return {Lambda::infinite(), Lambda::finite(1.0), Lambda::finite(1000.0), Lambda::finite(3000.0),
          Lambda::finite(6000.0)};
}

numerics::RadialGrid sample_grid(const SeriesOptions& opt) {
  return opt.spacing == Spacing::log
             ? numerics::RadialGrid::log_spaced(opt.rho_min, opt.rho_max, opt.points)
             : numerics::RadialGrid::linear(opt.rho_min, opt.rho_max, opt.points);
}

numerics::RadialGrid working_grid_for(const SeriesOptions& opt) {
  return numerics::RadialGrid::log_spaced(std::min(0.01, opt.rho_min), opt.rho_max, 2000);
}

std::vector<ProfileSeries> make_series(Quantity q, const SeriesOptions& opt) {
  const susy::SchrodingerProfile profile(opt.k, model::Superposition(opt.a1, opt.a2));
  const auto grid = sample_grid(opt);

  std::shared_ptr<const numerics::CumulativeNorm> norm;
  const bool needs_norm = q == Quantity::cumulative_norm ||
                          (is_family_quantity(q) &&
                           std::any_of(opt.lambdas.begin(), opt.lambdas.end(),
                                       [](const auto& l) { return !l.is_infinite(); }));
  if (needs_norm) {
    norm = darboux::build_norm(profile, working_grid_for(opt));
  } else {
    // Never consulted; keeps DarbouxFamily's invariant of holding a table.
    norm = std::make_shared<const numerics::CumulativeNorm>(
        numerics::CumulativeNorm{grid, std::vector<double>(grid.size(), 0.0)});
  }

  const auto sample = [&](const darboux::DarbouxFamily& fam, std::string label) {
    ProfileSeries s{q, std::move(label), {}};
    s.rows.reserve(grid.size());
    for (const double rho : grid.points()) s.rows.emplace_back(rho, evaluate(q, fam, rho));
    return s;
  };

  std::vector<ProfileSeries> out;
  if (!is_family_quantity(q)) {
    out.push_back(sample(darboux::DarbouxFamily(profile, norm, darboux::Lambda::infinite()),
                         no_lambda_label));
    return out;
  }
  for (const auto& lambda : opt.lambdas) {
    out.push_back(sample(darboux::DarbouxFamily(profile, norm, lambda), lambda.label()));
  }
  return out;
}

void write_csv(const ProfileSeries& s, std::ostream& out) {
  out << "rho,value\n";
  for (const auto& [rho, value] : s.rows) out << format_double(rho) << ',' << format_double(value) << '\n';
}

void write_json(const ProfileSeries& s, const SeriesOptions& opt, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [rho, value] : s.rows) rows.push_back({rho, value});
  const nlohmann::json doc{{"quantity", to_string(s.quantity)},
                           {"lambda", s.lambda_label},
                           {"k", opt.k},
                           {"a1", opt.a1},
                           {"a2", opt.a2},
                           {"rows", std::move(rows)}};
  out << doc.dump() << '\n';
}

std::string series_filename(const std::string& stem, const ProfileSeries& s, Format f) {
  return stem + "_lambda_" + s.lambda_label + (f == Format::json ? ".json" : ".csv");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isospectral neutron-diffusion profiles and identity checks", "isodiff"};
  app.require_subcommand(1);

  FigureFlags fig1, fig2, fig3, profile;
  auto* c1 = app.add_subcommand("fig1", "Isospectral potentials V_iso for each lambda");
  auto* c2 = app.add_subcommand("fig2", "Isospectral solutions psi_iso for each lambda");
  auto* c3 = app.add_subcommand("fig3", "Isospectral fluxes phi_iso for each lambda");
  auto* cp = app.add_subcommand("profile", "Any single quantity on an explicit grid");
  add_figure_flags(*c1, fig1);
  add_figure_flags(*c2, fig2);
  add_figure_flags(*c3, fig3);
  add_figure_flags(*cp, profile);
  std::vector<std::string> names;
  for (const auto& entry : kQuantityNames) names.emplace_back(entry.name);
  cp->add_option("--quantity", profile.quantity, "Quantity to tabulate")
      ->required()
      ->check(CLI::IsMember(names));

  FigureFlags vflags;
  bool no_family = false;
  double lambda_s = 1.0, atomic_number = 1.0, sigma_a = 1.0, s0 = 1.0;
  std::string recovery_lambda = "1e10";
  auto* cv = app.add_subcommand("verify", "Run every identity check, one JSON report per line");
  add_shape_flags(*cv, vflags);
  cv->add_flag("--no-family", no_family, "Skip the per-lambda checks");
  cv->add_option("--lambda-s", lambda_s, "Scattering mean free path (pillbox check)")->capture_default_str();
  cv->add_option("--atomic-number", atomic_number, "Atomic number A (pillbox check)")->capture_default_str();
  cv->add_option("--sigma-a", sigma_a, "Macroscopic absorption cross section (pillbox check)")
      ->capture_default_str();
  cv->add_option("--s0", s0, "Line source strength (pillbox check)")->capture_default_str();
  cv->add_option("--recovery-lambda", recovery_lambda,
                 "Large finite lambda for the V_iso -> V_B recovery check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (c1->parsed()) return emit("fig1", Quantity::potential_iso, fig1, to_options(fig1, figure_lambdas()), out);
    if (c2->parsed()) return emit("fig2", Quantity::psi_iso, fig2, to_options(fig2, figure_lambdas()), out);
    if (c3->parsed()) return emit("fig3", Quantity::flux_iso, fig3, to_options(fig3, figure_lambdas()), out);
    if (cp->parsed()) {
      const Quantity q = *parse_quantity(profile.quantity);
      if (!is_family_quantity(q) && !profile.lambdas.empty()) {
        throw UsageError("--lambda does not apply to " + profile.quantity);
      }
      return emit(profile.quantity, q, profile, to_options(profile, figure_lambdas()), out);
    }

    verify::SuiteConfig config;
    const auto opt = to_options(vflags, config.lambdas);
    config.k = opt.k;
    config.coefficients = model::Superposition(opt.a1, opt.a2);
    config.lambdas = no_family ? std::vector<darboux::Lambda>{} : opt.lambdas;
    const auto recovery = parse_lambdas({recovery_lambda});
    if (recovery.front().is_infinite()) throw UsageError("--recovery-lambda must be finite");
    config.recovery_lambda = recovery.front();
    try {
      config.medium = model::Medium(lambda_s, atomic_number, sigma_a);
      config.source = model::LineSource(s0);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto result = verify::run_suite(config);
    for (const auto& report : result.reports) out << nlohmann::json(report).dump() << '\n';
    return result.all_passed() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace isodiff::cli
