#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "isodiff/cli.hpp"

using namespace isodiff;
using namespace isodiff::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "isodiff");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("isodiff_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("quantity names round-trip") {
  for (const auto* name : {"potential_bosonic", "potential_fermionic", "potential_iso", "psi", "psi_iso",
                           "flux", "flux_iso", "k_eff_squared", "superpotential", "w_gen",
                           "cumulative_norm"}) {
    const auto q = parse_quantity(name);
    REQUIRE(q.has_value());
    CHECK(to_string(*q) == name);
  }
  CHECK_FALSE(parse_quantity("bogus").has_value());
}

TEST_CASE("fig1 defaults") {
  const auto dir = scratch("fig1");
  const auto r = invoke({"fig1", "--out", dir.string()});
  REQUIRE(r.code == 0);
  for (const auto* label : {"inf", "1", "1000", "3000", "6000"}) {
    const auto path = dir / (std::string("fig1_lambda_") + label + ".csv");
    REQUIRE(fs::exists(path));
    const auto rows = lines(slurp(path));
    CHECK(rows.front() == "rho,value");
    CHECK(rows.size() == 401);
  }
}

TEST_CASE("fig1 with lambda inf only matches the bosonic potential") {
  const auto dir = scratch("fig1inf");
  REQUIRE(invoke({"fig1", "--lambda", "inf", "--out", dir.string()}).code == 0);
  REQUIRE(invoke({"profile", "--quantity", "potential_bosonic", "--out", dir.string()}).code == 0);
  const auto iso = lines(slurp(dir / "fig1_lambda_inf.csv"));
  const auto bos = lines(slurp(dir / "potential_bosonic_lambda_none.csv"));
  CHECK(iso == bos);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 2);
}

TEST_CASE("figure output is byte-deterministic") {
  for (const auto* cmd : {"fig1", "fig2", "fig3"}) {
    const auto a = scratch(std::string(cmd) + "_a");
    const auto b = scratch(std::string(cmd) + "_b");
    REQUIRE(invoke({cmd, "--out", a.string()}).code == 0);
    REQUIRE(invoke({cmd, "--out", b.string()}).code == 0);
    for (const auto& entry : fs::directory_iterator(a)) {
      CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    }
  }
}

TEST_CASE("fig3 json documents") {
  const auto dir = scratch("fig3json");
  REQUIRE(invoke({"fig3", "--format", "json", "--points", "50", "--out", dir.string()}).code == 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "fig3_lambda_1000.json"));
  CHECK(doc.at("quantity") == "flux_iso");
  CHECK(doc.at("lambda") == "1000");
  CHECK(doc.at("k") == 1.0);
  CHECK(doc.at("a1") == 1.0);
  CHECK(doc.at("a2") == 1.0);
  CHECK(doc.at("rows").size() == 50);
  CHECK(doc.at("rows")[0].size() == 2);
}

TEST_CASE("csv values round-trip at full precision") {
  SeriesOptions opt;
  opt.lambdas = {darboux::Lambda::finite(1.0)};
  opt.points = 5;
  const auto series = make_series(Quantity::psi_iso, opt);
  REQUIRE(series.size() == 1);
  std::ostringstream out;
  write_csv(series[0], out);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto comma = rows[i + 1].find(',');
    CHECK(std::stod(rows[i + 1].substr(0, comma)) == series[0].rows[i].first);
    CHECK(std::stod(rows[i + 1].substr(comma + 1)) == series[0].rows[i].second);
  }
}

TEST_CASE("invalid flags exit 2 and write nothing") {
  const auto dir = scratch("bad");
  CHECK(invoke({"fig1", "--lambda", "-5", "--out", dir.string()}).code == 2);
  CHECK(invoke({"fig1", "--lambda", "0", "--out", dir.string()}).code == 2);
  CHECK(invoke({"fig2", "--rho-min", "0", "--out", dir.string()}).code == 2);
  CHECK(invoke({"fig2", "--rho-min", "5", "--rho-max", "1", "--out", dir.string()}).code == 2);
  CHECK(invoke({"fig3", "--points", "1", "--out", dir.string()}).code == 2);
  CHECK(invoke({"fig3", "--a1", "-1", "--out", dir.string()}).code == 2);
  CHECK(invoke({"fig3", "--spacing", "cubic", "--out", dir.string()}).code == 2);
  CHECK(invoke({"profile", "--quantity", "nope", "--out", dir.string()}).code == 2);
  CHECK(invoke({"profile", "--quantity", "psi", "--lambda", "1", "--out", dir.string()}).code == 2);
  CHECK(invoke({"verify", "--lambda", "-1"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK_FALSE(fs::exists(dir));
}

TEST_CASE("profile quantities") {
  const auto dir = scratch("profile");
  REQUIRE(invoke({"profile", "--quantity", "k_eff_squared", "--lambda", "1", "--lambda", "inf",
                  "--spacing", "linear", "--rho-min", "0.5", "--rho-max", "3", "--points", "6",
                  "--out", dir.string()})
              .code == 0);
  const auto rows = lines(slurp(dir / "k_eff_squared_lambda_inf.csv"));
  REQUIRE(rows.size() == 7);
  CHECK(rows[1] == "0.5,1");
  CHECK(rows[6] == "3,1");
  CHECK(fs::exists(dir / "k_eff_squared_lambda_1.csv"));

  REQUIRE(invoke({"profile", "--quantity", "cumulative_norm", "--out", dir.string()}).code == 0);
  const auto norm = lines(slurp(dir / "cumulative_norm_lambda_none.csv"));
  CHECK(norm.size() == 401);
}

TEST_CASE("series validation") {
  ProfileSeries s{Quantity::psi, "inf", {{1.0, 2.0}}};
  CHECK_THROWS(validate(s));
  s.lambda_label = "none";
  CHECK_NOTHROW(validate(s));
  s.rows = {{1.0, 1.0}, {1.0, 2.0}};
  CHECK_THROWS(validate(s));
  s.rows = {{1.0, std::nan("")}};
  CHECK_THROWS(validate(s));
}

TEST_CASE("non-finite output is a runtime failure, not a partial write") {
  const auto dir = scratch("overflow");
  // psi^2 overflows long before k rho = 713.
  const auto r = invoke({"fig2", "--k", "100", "--rho-max", "8", "--lambda", "inf", "--out", dir.string()});
  CHECK(r.code == 1);
  CHECK_FALSE(fs::exists(dir));
}

TEST_CASE("verify command") {
  const auto r = invoke({"verify"});
  CHECK(r.code == 0);
  const auto reports = lines(r.out);
  CHECK(reports.size() == 26);
  for (const auto& line : reports) CHECK(nlohmann::json::parse(line).at("passed") == true);

  const auto solo = invoke({"verify", "--no-family"});
  CHECK(solo.code == 0);
  CHECK(lines(solo.out).size() == 6);

  // The default recovery lambda is sized for k = 1; steeper seeds need a larger one.
  CHECK(invoke({"verify", "--k", "2", "--a1", "1", "--a2", "0.5", "--lambda", "10"}).code == 1);
  CHECK(invoke({"verify", "--k", "2", "--a1", "1", "--a2", "0.5", "--lambda", "10", "--recovery-lambda", "1e20"})
            .code == 0);
  CHECK(invoke({"verify", "--recovery-lambda", "inf"}).code == 2);
}
