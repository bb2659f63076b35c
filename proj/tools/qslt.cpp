// qslt: speed-limit ratios of a Hawking-dressed GHZ state under Pauli noise.
//
//   qslt eval --channel DPC --alpha 0.25 --temperature 3 --p-tau 0.8
//   qslt sweep --channel BFC --axis temperature --lo 0.5 --hi 10 --count 20 --alpha 0.25 --p-tau 0.8
//   qslt optimal-c --channel DPC --temperature 3 --p-tau 0.3
//   qslt reproduce fig4 --out-dir out/
//   qslt selftest
//
// Exit codes: 0 success, 1 input error, 2 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsl/cli/config.hpp"
#include "qsl/cli/figures.hpp"
#include "qsl/cli/output.hpp"
#include "qsl/cli/selftest.hpp"
#include "qsl/cli/sweep.hpp"
#include "qsl/entanglement.hpp"
#include "qsl/errors.hpp"
#include "qsl/qslt.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;

struct ScenarioFlags {
  std::string channel = "DPC";
  double omega = 1.0;
  std::optional<double> temperature;
  std::optional<double> mass;
  std::optional<double> alpha;
  std::optional<double> concurrence;
  std::optional<double> p_tau;
  std::string branch = "lower";
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& f, bool with_state) {
  cmd->add_option("--channel", f.channel, "DPC, BFC, BPFC or PFC")->capture_default_str();
  cmd->add_option("--omega", f.omega, "mode frequency")->capture_default_str();
  cmd->add_option("--temperature", f.temperature, "Hawking temperature T");
  cmd->add_option("--mass", f.mass, "black-hole mass M, T = 1/(8 pi M)");
  if (with_state) {
    cmd->add_option("--alpha", f.alpha, "GHZ amplitude alpha in [0, 1]");
    cmd->add_option("--concurrence", f.concurrence, "initial GM concurrence (alternative to --alpha)");
  }
  cmd->add_option("--p-tau", f.p_tau, "final decoherence parameter in [0, 1]");
  cmd->add_option("--branch", f.branch, "alpha branch for a concurrence: lower or upper")->capture_default_str();
}

double resolve_temperature(const ScenarioFlags& f) {
  if (f.temperature && f.mass) {
    return qsl::Scenario::create(0.0, f.omega, *f.temperature, *f.mass).temperature();
  }
  if (f.temperature) return *f.temperature;
  if (f.mass) return qsl::hawking_temperature(*f.mass);
  throw qsl::InputError("temperature: give --temperature or --mass");
}

double require_p_tau(const ScenarioFlags& f) {
  if (!f.p_tau) throw qsl::InputError("p_tau: --p-tau is required");
  return *f.p_tau;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qsl::InputError("cannot read config " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_eval(const ScenarioFlags& f) {
  const auto kind = qsl::parse_channel_kind(f.channel);
  const double temperature = resolve_temperature(f);
  const double p_tau = require_p_tau(f);
  if (f.alpha && f.concurrence) throw qsl::InputError("concurrence: give either --alpha or --concurrence");
  double alpha = 0.0;
  if (f.concurrence) {
    alpha = qsl::alpha_from_concurrence(*f.concurrence, f.omega, temperature, qsl::parse_branch(f.branch));
  } else if (f.alpha) {
    alpha = *f.alpha;
  } else {
    throw qsl::InputError("alpha: give --alpha or --concurrence");
  }
  const qsl::Scenario scenario = qsl::Scenario::create(alpha, f.omega, temperature, f.mass);
  const qsl::QsltResult r = qsl::qslt_ratio(kind, scenario, p_tau);

  nlohmann::json out = nlohmann::json::object();
  out["channel"] = std::string(qsl::to_string(kind));
  out["alpha"] = alpha;
  out["omega"] = f.omega;
  out["temperature"] = temperature;
  out["p_tau"] = p_tau;
  out["concurrence"] = qsl::gm_concurrence(scenario);
  out["ratio"] = r.ratio;
  out["distance"] = r.distance;
  out["path_length"] = r.path_length;
  out["frozen"] = r.frozen;
  out["converged"] = r.converged;
  out["quadrature_error_estimate"] = r.quadrature_error_estimate;
  const auto analytic = qsl::closed_form_ratio(kind, scenario, p_tau);
  out["closed_form_ratio"] = analytic ? nlohmann::json(*analytic) : nlohmann::json(nullptr);
  std::cout << out.dump(2) << "\n";
  return r.converged ? 0 : kExitNumerical;
}

int run_sweep_command(qsl::cli::SweepConfig config, const std::string& config_path) {
  if (!config_path.empty()) {
    auto parsed = qsl::cli::parse_config(read_file(config_path));
    if (!std::holds_alternative<qsl::cli::SweepConfig>(parsed)) {
      throw qsl::InputError("config: " + config_path + " describes a figure; use `qslt reproduce --config`");
    }
    config = std::get<qsl::cli::SweepConfig>(parsed);
  }
  const qsl::cli::Dataset data = qsl::cli::run_sweep(config);
  const qsl::cli::Table table = qsl::cli::sweep_table(data);
  const std::string body =
      config.format == qsl::cli::OutputFormat::csv ? qsl::cli::to_csv(table) : qsl::cli::to_json(table).dump(2) + "\n";
  if (config.output.empty()) {
    std::cout << body;
  } else {
    qsl::cli::write_file(config.output, body);
    qsl::cli::write_file(config.output + ".manifest.json", qsl::cli::sweep_manifest(config).dump(2) + "\n");
  }
  bool converged = true;
  for (const auto& row : data.rows) converged = converged && row.result.converged;
  return converged ? 0 : kExitNumerical;
}

int run_optimal(const ScenarioFlags& f, int grid, double tolerance) {
  const auto kind = qsl::parse_channel_kind(f.channel);
  const double temperature = resolve_temperature(f);
  const double p_tau = require_p_tau(f);
  if (!(p_tau >= 0.0 && p_tau <= 1.0)) throw qsl::InputError("p_tau: must lie in [0, 1]");
  qsl::OptimizerOptions options;
  options.grid_resolution = grid;
  options.refinement_tolerance = tolerance;
  options.branch = qsl::parse_branch(f.branch);
  const qsl::OptimalCResult r = qsl::optimal_concurrence(kind, f.omega, temperature, p_tau, options);

  nlohmann::json out = nlohmann::json::object();
  out["channel"] = std::string(qsl::to_string(kind));
  out["omega"] = f.omega;
  out["temperature"] = temperature;
  out["p_tau"] = p_tau;
  out["branch"] = std::string(qsl::to_string(options.branch));
  out["c_op"] = r.c_op;
  out["c_max"] = r.c_max;
  out["ratio_min"] = r.ratio_min;
  out["boundary"] = std::string(qsl::to_string(r.boundary));
  out["grid_resolution"] = r.grid_resolution;
  out["refinement_tolerance"] = r.refinement_tolerance;
  out["refinement_iterations"] = r.refinement_iterations;
  out["converged"] = r.converged;
  std::cout << out.dump(2) << "\n";
  return r.converged ? 0 : kExitNumerical;
}

int run_reproduce(const std::string& figure, std::string out_dir, const std::string& config_path) {
  std::string id_text = figure;
  if (!config_path.empty()) {
    auto parsed = qsl::cli::parse_config(read_file(config_path));
    const auto* request = std::get_if<qsl::cli::FigureRequest>(&parsed);
    if (!request) throw qsl::InputError("config: " + config_path + " describes a sweep; use `qslt sweep --config`");
    id_text = std::string(qsl::cli::to_string(request->id));
    out_dir = request->output;
  }
  if (id_text.empty()) throw qsl::InputError("figure: name one of fig1 .. fig6");
  const auto spec = qsl::cli::figure_spec(qsl::cli::parse_figure_id(id_text));
  for (const auto& path : qsl::cli::reproduce(spec, out_dir)) std::cout << path.string() << "\n";
  return 0;
}

int run_selftest() {
  bool ok = true;
  for (const auto& c : qsl::cli::run_selftest()) {
    std::printf("[%s] %s: worst %.3e (tolerance %.1e)\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.worst,
                c.tolerance);
    ok = ok && c.passed;
  }
  return ok ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum speed limit of a GHZ-like state near a Schwarzschild black hole"};
  app.set_version_flag("--version", QSLT_VERSION);
  app.require_subcommand(1);

  ScenarioFlags eval_flags;
  auto* eval = app.add_subcommand("eval", "ratio for one scenario");
  add_scenario_flags(eval, eval_flags, true);

  qsl::cli::SweepConfig sweep_config;
  std::string channel = "DPC", axis = "temperature", branch = "lower", format = "csv", sweep_config_path;
  auto* sweep = app.add_subcommand("sweep", "ratio along one parameter axis");
  sweep->add_option("--channel", channel)->capture_default_str();
  sweep->add_option("--axis", axis, "temperature, p_tau, concurrence or alpha")->capture_default_str();
  sweep->add_option("--lo", sweep_config.lo);
  sweep->add_option("--hi", sweep_config.hi);
  sweep->add_option("--count", sweep_config.count)->capture_default_str();
  sweep->add_option("--omega", sweep_config.omega)->capture_default_str();
  sweep->add_option("--temperature", sweep_config.temperature);
  sweep->add_option("--mass", sweep_config.mass);
  sweep->add_option("--alpha", sweep_config.alpha);
  sweep->add_option("--concurrence", sweep_config.concurrence);
  sweep->add_option("--p-tau", sweep_config.p_tau);
  sweep->add_option("--branch", branch)->capture_default_str();
  sweep->add_option("--output", sweep_config.output, "output file (default stdout)");
  sweep->add_option("--format", format, "csv or json")->capture_default_str();
  sweep->add_option("--config", sweep_config_path, "JSON sweep config; replaces all flags");

  ScenarioFlags optimal_flags;
  int grid = 2001;
  double tolerance = 1e-6;
  auto* optimal = app.add_subcommand("optimal-c", "initial concurrence minimizing the ratio");
  add_scenario_flags(optimal, optimal_flags, false);
  optimal->add_option("--grid", grid, "scan points on [0, c_max]")->capture_default_str();
  optimal->add_option("--tolerance", tolerance, "golden-section bracket width")->capture_default_str();

  std::string figure, out_dir = ".", figure_config_path;
  auto* reproduce = app.add_subcommand("reproduce", "write the CSV panels and manifest of a figure");
  reproduce->add_option("figure", figure, "fig1 .. fig6");
  reproduce->add_option("--out-dir", out_dir)->capture_default_str();
  reproduce->add_option("--config", figure_config_path, "JSON figure config; replaces the arguments");

  auto* selftest = app.add_subcommand("selftest", "oracle equivalence checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*eval) return run_eval(eval_flags);
    if (*sweep) {
      sweep_config.channel = qsl::parse_channel_kind(channel);
      sweep_config.axis = qsl::cli::parse_axis(axis);
      sweep_config.branch = qsl::parse_branch(branch);
      sweep_config.format = qsl::cli::parse_format(format);
      return run_sweep_command(sweep_config, sweep_config_path);
    }
    if (*optimal) return run_optimal(optimal_flags, grid, tolerance);
    if (*reproduce) return run_reproduce(figure, out_dir, figure_config_path);
    if (*selftest) return run_selftest();
  } catch (const qsl::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qsl::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
