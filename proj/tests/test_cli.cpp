#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qsl/cli/config.hpp"
#include "qsl/cli/figures.hpp"
#include "qsl/cli/output.hpp"
#include "qsl/cli/selftest.hpp"
#include "qsl/cli/sweep.hpp"
#include "qsl/entanglement.hpp"
#include "qsl/errors.hpp"

using namespace qsl;
using namespace qsl::cli;

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string error_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  [[nodiscard]] std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    FAIL("missing column ", name);
    return 0;
  }
};

Csv read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  Csv csv;
  std::string line;
  std::getline(in, line);
  std::stringstream head(line);
  for (std::string cell; std::getline(head, cell, ',');) csv.header.push_back(cell);
  while (std::getline(in, line)) {
    std::stringstream row(line);
    std::vector<double> values;
    for (std::string cell; std::getline(row, cell, ',');) values.push_back(std::stod(cell));
    csv.rows.push_back(values);
  }
  return csv;
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("qsl_test_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

SweepConfig temperature_sweep(ChannelKind kind, double p_tau, int count) {
  SweepConfig c;
  c.channel = kind;
  c.axis = Axis::temperature;
  c.lo = 0.5;
  c.hi = 10.0;
  c.count = count;
  c.alpha = 0.25;
  c.p_tau = p_tau;
  return c;
}

}  // namespace

TEST_CASE("fixture config is accepted") {
  const ParsedConfig parsed = parse_config(read_text(std::filesystem::path(QSL_FIXTURE_DIR) / "sweep_dpc_temperature.json"));
  REQUIRE(std::holds_alternative<SweepConfig>(parsed));
  const SweepConfig& c = std::get<SweepConfig>(parsed);
  CHECK(c.channel == ChannelKind::dpc);
  CHECK(c.axis == Axis::temperature);
  CHECK(c.lo == 0.5);
  CHECK(c.hi == 10.0);
  CHECK(c.count == 200);
  CHECK(c.alpha == 0.25);
  CHECK(c.p_tau == 0.8);
}

TEST_CASE("config round trip") {
  const ParsedConfig minimal = parse_config(R"({"channel": "PFC", "axis": "concurrence", "temperature": 3, "p_tau": 0.3})");
  CHECK(parse_config(serialize_config(minimal)) == minimal);

  SweepConfig full = temperature_sweep(ChannelKind::bpfc, 0.4, 7);
  full.omega = 2.0;
  full.branch = Branch::upper;
  full.output = "out/sweep.json";
  full.format = OutputFormat::json;
  const ParsedConfig wrapped = full;
  CHECK(parse_config(serialize_config(wrapped)) == wrapped);
  CHECK(serialize_config(parse_config(serialize_config(wrapped))) == serialize_config(wrapped));

  const ParsedConfig figure = parse_config(R"({"figure": "fig4", "output": "figs"})");
  REQUIRE(std::holds_alternative<FigureRequest>(figure));
  CHECK(std::get<FigureRequest>(figure).id == FigureId::fig4);
  CHECK(parse_config(serialize_config(figure)) == figure);
}

TEST_CASE("config errors name the field") {
  const std::string bad_p = error_of(R"({"channel": "DPC", "axis": "temperature", "range": [0.5, 10], "alpha": 0.25, "p_tau": 1.5})");
  CHECK(bad_p.find("p_tau") != std::string::npos);
  CHECK(bad_p.find("[0, 1]") != std::string::npos);

  CHECK(error_of(R"({"channel": "DPC", "axis": "temperature", "range": [0.5, 10], "alpha": 0.25, "p_tau": 0.5, "colour": 1})")
            .find("colour") != std::string::npos);
  CHECK(error_of(R"({"channel": "XYZ", "axis": "p_tau", "temperature": 1, "alpha": 0.5})").find("channel") != std::string::npos);
  CHECK(error_of(R"({"channel": "DPC", "axis": "temperature", "alpha": 0.25, "p_tau": 0.5})").find("range") != std::string::npos);
  CHECK(error_of(R"({"channel": "DPC", "axis": "temperature", "range": [10, 0.5], "alpha": 0.25, "p_tau": 0.5})")
            .find("range") != std::string::npos);
  CHECK(error_of(R"({"channel": "DPC", "axis": "p_tau", "alpha": 0.25})").find("temperature") != std::string::npos);
  CHECK(error_of(R"({"channel": "DPC", "axis": "p_tau", "temperature": 3, "alpha": 0.25, "count": 1})").find("count") !=
        std::string::npos);
  CHECK(error_of(R"({"channel": "DPC", "axis": "p_tau", "temperature": 3, "concurrence": 0.9})").find("concurrence") !=
        std::string::npos);
  CHECK(error_of(R"({"channel": "DPC", "axis": "p_tau", "temperature": 3, "alpha": "big"})").find("alpha") !=
        std::string::npos);
  CHECK(error_of(R"({"figure": "fig9"})").find("figure") != std::string::npos);
  CHECK(error_of(R"({"figure": "fig1", "alpha": 0.3})").find("alpha") != std::string::npos);

  const std::string syntax = error_of("{\n  \"channel\": \"DPC\",\n  \"axis\" \"p_tau\"\n}");
  CHECK(syntax.find("syntax") != std::string::npos);
  CHECK(syntax.find("line 3") != std::string::npos);
}

TEST_CASE("config helpers") {
  SweepConfig c;
  c.channel = ChannelKind::dpc;
  c.axis = Axis::concurrence;
  c.mass = 1.0;
  c.p_tau = 0.3;
  CHECK_NOTHROW(c.validate());
  REQUIRE(c.effective_temperature().has_value());
  CHECK(*c.effective_temperature() == doctest::Approx(0.039789).epsilon(1e-5));
  CHECK(c.range().second == doctest::Approx(max_concurrence(1.0, *c.effective_temperature())));
  CHECK(parse_axis("p_tau") == Axis::p_tau);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_axis("time"), InputError);
}

TEST_CASE("linspace") {
  const auto two = linspace(0.5, 10.0, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == 0.5);
  CHECK(two[1] == 10.0);
  const auto many = linspace(0.0, 0.7, 8);
  CHECK(many.back() == 0.7);
  for (std::size_t i = 1; i < many.size(); ++i) CHECK(many[i] - many[i - 1] == doctest::Approx(0.1));
}

TEST_CASE("run_sweep") {
  SUBCASE("count = 2 gives two rows") {
    CHECK(run_sweep(temperature_sweep(ChannelKind::dpc, 0.8, 2)).rows.size() == 2);
  }
  SUBCASE("depolarizing ratio decreases with temperature at p_tau = 0.8") {
    const Dataset d = run_sweep(temperature_sweep(ChannelKind::dpc, 0.8, 20));
    CHECK(d.axis_name == "temperature");
    REQUIRE(d.rows.size() == 20);
    for (std::size_t i = 1; i < d.rows.size(); ++i) CHECK(d.rows[i].result.ratio < d.rows[i - 1].result.ratio);
  }
  SUBCASE("phase flip ratio is constant along the concurrence axis") {
    SweepConfig c;
    c.channel = ChannelKind::pfc;
    c.axis = Axis::concurrence;
    c.temperature = 3.0;
    c.p_tau = 0.3;
    c.count = 11;
    const Dataset d = run_sweep(c);
    REQUIRE(d.rows.size() == 11);
    CHECK(d.rows.back().axis_value == doctest::Approx(max_concurrence(1.0, 3.0)));
    for (std::size_t i = 2; i < d.rows.size(); ++i) CHECK(d.rows[i].result.ratio == doctest::Approx(d.rows[1].result.ratio).epsilon(1e-10));
    CHECK(d.rows[0].result.frozen);
  }
  SUBCASE("concurrence resolves to alpha") {
    SweepConfig c;
    c.channel = ChannelKind::bfc;
    c.axis = Axis::p_tau;
    c.temperature = 3.0;
    c.concurrence = gm_concurrence(Scenario::create(0.25, 1.0, 3.0));
    c.count = 3;
    for (const SweepRow& row : run_sweep(c).rows) CHECK(row.alpha == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("rows stay within the geometric bounds") {
    SweepConfig c;
    c.channel = ChannelKind::bpfc;
    c.axis = Axis::alpha;
    c.temperature = 1.0;
    c.p_tau = 0.2;
    c.count = 21;
    for (const SweepRow& row : run_sweep(c).rows) {
      CHECK(row.result.ratio >= 0.0);
      CHECK(row.result.ratio <= 1.0 + 1e-10);
    }
  }
  SUBCASE("invalid configs are rejected") {
    SweepConfig c = temperature_sweep(ChannelKind::dpc, 0.8, 2);
    c.p_tau.reset();
    CHECK_THROWS_AS(run_sweep(c), InputError);
  }
}

TEST_CASE("tables") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");

  const Table t{{"x", "y"}, {{1.0, 0.5}, {2.0, 0.25}}};
  CHECK(to_csv(t) == "x,y\n1,0.5\n2,0.25\n");
  const nlohmann::json j = to_json(t);
  CHECK(j["x"] == nlohmann::json::array({1.0, 2.0}));
  CHECK(j["y"][1] == 0.25);

  const Dataset d = run_sweep(temperature_sweep(ChannelKind::dpc, 0.8, 3));
  const Table sweep = sweep_table(d);
  REQUIRE(sweep.columns.size() >= 3);
  CHECK(sweep.columns[0] == "temperature");
  CHECK(sweep.rows.size() == 3);

  const nlohmann::json manifest = sweep_manifest(temperature_sweep(ChannelKind::dpc, 0.8, 3));
  CHECK(manifest.contains("channel"));
  CHECK(manifest.contains("omega"));
  CHECK(manifest.contains("alpha"));
  CHECK(manifest.contains("branch"));
  CHECK(manifest.contains("p_tau"));
  CHECK(manifest.contains("quadrature_tolerance"));
  CHECK(manifest.contains("version"));
}

TEST_CASE("write_file") {
  const auto dir = scratch_dir("write");
  write_file(dir / "nested" / "a.txt", "hello\n");
  CHECK(read_text(dir / "nested" / "a.txt") == "hello\n");
  write_file(dir / "blocker", "x");
  CHECK_THROWS(write_file(dir / "blocker" / "b.txt", "y"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("figure specs") {
  const FigureSpec fig1 = figure_spec(FigureId::fig1);
  CHECK(fig1.channel == ChannelKind::dpc);
  REQUIRE(fig1.alpha.has_value());
  CHECK(*fig1.alpha == 0.25);
  REQUIRE(fig1.panels.size() == 4);
  CHECK(fig1.panels[2].p_tau == 0.6);
  CHECK(fig1.panels[2].source == "caption");
  CHECK(fig1.panels[3].p_tau == 0.8);

  const FigureSpec fig3 = figure_spec(FigureId::fig3);
  CHECK(fig3.kind == FigureKind::ratio_vs_concurrence);
  CHECK(fig3.temperature == 3.0);
  CHECK(fig3.axis_hi == doctest::Approx(max_concurrence(1.0, 3.0)));

  const FigureSpec fig6 = figure_spec(FigureId::fig6);
  CHECK(fig6.kind == FigureKind::optimum_vs_p_tau);
  CHECK(fig6.channel == ChannelKind::bfc);
}

TEST_CASE("reproduce fig4") {
  const auto dir = scratch_dir("fig4");
  const auto files = reproduce(figure_spec(FigureId::fig4), dir);
  REQUIRE(files.size() == 2);
  CHECK(files.back().filename() == "fig4_manifest.json");
  const Csv csv = read_csv(files.front());
  const double c_max = max_concurrence(1.0, 3.0);
  const std::size_t p = csv.column("p_tau");
  const std::size_t c = csv.column("c_op");
  const std::size_t r = csv.column("ratio_min");
  REQUIRE(csv.rows.size() == 101);
  for (const auto& row : csv.rows) {
    CHECK(row[c] >= 0.0);
    CHECK(row[c] <= c_max + 1e-12);
    CHECK(row[r] >= 0.0);
    CHECK(row[r] <= 1.0 + 1e-10);
    if (row[p] <= 0.08 + 1e-9) CHECK(row[c] == doctest::Approx(c_max).epsilon(1e-10));
    if (row[p] <= 0.12 + 1e-9) CHECK(std::abs(row[c] - 0.76) <= 0.02);
    if (row[p] >= 0.62 - 1e-9) CHECK(row[c] == 0.0);
  }
  const auto manifest = nlohmann::json::parse(read_text(files.back()));
  CHECK(manifest["channel"] == "DPC");
  CHECK(manifest["temperature"] == 3.0);
  CHECK(manifest["branch"] == "lower");
  std::filesystem::remove_all(dir);
}

TEST_CASE("reproduce fig6") {
  const auto dir = scratch_dir("fig6");
  const auto files = reproduce(figure_spec(FigureId::fig6), dir);
  const Csv csv = read_csv(files.front());
  const std::size_t p = csv.column("p_tau");
  const std::size_t c = csv.column("c_op");
  const std::size_t b = csv.column("boundary");
  double previous = 2.0;
  for (const auto& row : csv.rows) {
    if (row[p] < 0.58 - 1e-9 || row[p] > 0.72 + 1e-9) continue;
    CHECK(row[b] == static_cast<double>(OptimumLocation::interior));
    CHECK(row[c] < previous);
    previous = row[c];
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("reproduce fig1 panels") {
  const auto dir = scratch_dir("fig1");
  const auto files = reproduce(figure_spec(FigureId::fig1), dir);
  REQUIRE(files.size() == 5);
  CHECK(files[3].filename() == "fig1_d.csv");
  const Csv d = read_csv(files[3]);
  REQUIRE(d.rows.size() == 200);
  const std::size_t ratio = d.column("ratio");
  for (std::size_t i = 1; i < d.rows.size(); ++i) CHECK(d.rows[i][ratio] < d.rows[i - 1][ratio]);
  const auto manifest = nlohmann::json::parse(read_text(files.back()));
  CHECK(manifest["panel_p_tau_source"][0] == "scan-selected");
  CHECK(manifest["panel_p_tau_source"][3] == "caption");
  std::filesystem::remove_all(dir);
}

TEST_CASE("selftest") {
  for (const SelftestCheck& check : run_selftest()) {
    CHECK_MESSAGE(check.passed, check.name, " worst=", check.worst, " tolerance=", check.tolerance);
  }
}
