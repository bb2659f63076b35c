#include "qsl/cli/figures.hpp"

#include <stdexcept>

#include <json.hpp>

#include "qsl/cli/output.hpp"
#include "qsl/cli/sweep.hpp"
#include "qsl/entanglement.hpp"
#include "qsl/parallel.hpp"

namespace qsl::cli {

namespace {

constexpr int kTemperaturePoints = 200;
constexpr double kTemperatureLo = 0.1;
constexpr double kTemperatureHi = 10.0;
constexpr int kConcurrencePoints = 201;
constexpr int kOptimumPoints = 101;

FigurePanel caption(const char* label, double p_tau) { return {label, p_tau, "caption"}; }
FigurePanel scanned(const char* label, double p_tau) { return {label, p_tau, "scan-selected"}; }

FigureSpec base(FigureId id, FigureKind kind, ChannelKind channel) {
  FigureSpec s;
  s.id = id;
  s.kind = kind;
  s.channel = channel;
  return s;
}

FigureSpec temperature_figure(FigureId id, ChannelKind channel, std::vector<FigurePanel> panels) {
  FigureSpec s = base(id, FigureKind::ratio_vs_temperature, channel);
  s.alpha = 0.25;
  s.axis_lo = kTemperatureLo;
  s.axis_hi = kTemperatureHi;
  s.axis_count = kTemperaturePoints;
  s.panels = std::move(panels);
  return s;
}

FigureSpec concurrence_figure(FigureId id, ChannelKind channel, std::vector<FigurePanel> panels) {
  FigureSpec s = base(id, FigureKind::ratio_vs_concurrence, channel);
  s.temperature = 3.0;
  s.axis_lo = 0.0;
  s.axis_hi = max_concurrence(s.omega, *s.temperature);
  s.axis_count = kConcurrencePoints;
  s.panels = std::move(panels);
  return s;
}

FigureSpec optimum_figure(FigureId id, ChannelKind channel) {
  FigureSpec s = base(id, FigureKind::optimum_vs_p_tau, channel);
  s.temperature = 3.0;
  s.axis_lo = 0.0;
  s.axis_hi = 1.0;
  s.axis_count = kOptimumPoints;
  return s;
}

Table optimum_table(const FigureSpec& spec, const OptimizerOptions& options) {
  const std::vector<double> p_taus = linspace(spec.axis_lo, spec.axis_hi, spec.axis_count);
  Table t;
  t.columns = {"p_tau", "c_op", "ratio_min", "boundary", "c_max", "converged"};
  // Boundary codes: 0 interior, 1 at_zero, 2 at_cmax, 3 degenerate.
  for (double p_tau : p_taus) {
    const OptimalCResult r = optimal_concurrence(spec.channel, spec.omega, *spec.temperature, p_tau, options);
    t.rows.push_back({p_tau, r.c_op, r.ratio_min, static_cast<double>(r.boundary), r.c_max, r.converged ? 1.0 : 0.0});
  }
  return t;
}

Table concurrence_table(const FigureSpec& spec, double p_tau) {
  const std::vector<double> grid = linspace(spec.axis_lo, spec.axis_hi, spec.axis_count);
  const auto points = ratio_vs_concurrence(spec.channel, spec.omega, *spec.temperature, p_tau, grid, spec.branch);
  Table t;
  t.columns = {"concurrence", "alpha", "ratio", "distance", "path_length", "frozen", "converged"};
  for (const auto& pt : points) {
    const QsltResult& r = pt.result;
    t.rows.push_back({pt.concurrence, pt.alpha, r.ratio, r.distance, r.path_length, r.frozen ? 1.0 : 0.0,
                      r.converged ? 1.0 : 0.0});
  }
  return t;
}

Table temperature_table(const FigureSpec& spec, double p_tau) {
  SweepConfig c;
  c.channel = spec.channel;
  c.axis = Axis::temperature;
  c.lo = spec.axis_lo;
  c.hi = spec.axis_hi;
  c.count = spec.axis_count;
  c.omega = spec.omega;
  c.alpha = spec.alpha;
  c.p_tau = p_tau;
  return sweep_table(run_sweep(c));
}

}  // namespace

FigureSpec figure_spec(FigureId id) {
  switch (id) {
    case FigureId::fig1:
      // Temperature trend of the depolarizing ratio reverses near p_tau = 0.42.
      return temperature_figure(id, ChannelKind::dpc,
                                {scanned("a", 0.1), scanned("b", 0.3), caption("c", 0.6), caption("d", 0.8)});
    case FigureId::fig2:
      // Bit flip: decreasing in T below p_tau ~ 0.7, increasing above.
      return temperature_figure(id, ChannelKind::bfc,
                                {scanned("a", 0.1), scanned("b", 0.3), scanned("c", 0.5), scanned("d", 0.8)});
    case FigureId::fig3:
      return concurrence_figure(id, ChannelKind::dpc,
                                {caption("a", 0.01), scanned("b", 0.3), caption("c", 0.6), caption("d", 0.8)});
    case FigureId::fig4: return optimum_figure(id, ChannelKind::dpc);
    case FigureId::fig5:
      return concurrence_figure(id, ChannelKind::bfc,
                                {scanned("a", 0.1), scanned("b", 0.4), scanned("c", 0.65), scanned("d", 0.8)});
    case FigureId::fig6: return optimum_figure(id, ChannelKind::bfc);
  }
  throw std::logic_error("unhandled FigureId");
}

std::vector<std::filesystem::path> reproduce(const FigureSpec& spec, const std::filesystem::path& directory) {
  const std::string stem(to_string(spec.id));
  const OptimizerOptions options{};
  std::vector<std::filesystem::path> written;
  std::vector<std::string> file_names;

  auto emit = [&](const std::string& name, const Table& table) {
    const auto path = directory / name;
    write_file(path, to_csv(table));
    written.push_back(path);
    file_names.push_back(name);
  };

  if (spec.kind == FigureKind::optimum_vs_p_tau) {
    emit(stem + ".csv", optimum_table(spec, options));
  } else {
    for (const FigurePanel& panel : spec.panels) {
      const std::string name = stem + "_" + panel.label + ".csv";
      emit(name, spec.kind == FigureKind::ratio_vs_temperature ? temperature_table(spec, panel.p_tau)
                                                               : concurrence_table(spec, panel.p_tau));
    }
  }

  nlohmann::json manifest = nlohmann::json::object();
  manifest["figure"] = stem;
  manifest["channel"] = std::string(to_string(spec.channel));
  manifest["omega"] = spec.omega;
  manifest["alpha"] = spec.alpha ? nlohmann::json(*spec.alpha) : nlohmann::json(nullptr);
  manifest["temperature"] = spec.temperature ? nlohmann::json(*spec.temperature) : nlohmann::json(nullptr);
  manifest["branch"] = std::string(to_string(spec.branch));
  switch (spec.kind) {
    case FigureKind::ratio_vs_temperature: manifest["axis"] = "temperature"; break;
    case FigureKind::ratio_vs_concurrence: manifest["axis"] = "concurrence"; break;
    case FigureKind::optimum_vs_p_tau: manifest["axis"] = "p_tau"; break;
  }
  manifest["axis_lo"] = spec.axis_lo;
  manifest["axis_hi"] = spec.axis_hi;
  manifest["axis_count"] = spec.axis_count;
  nlohmann::json labels = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json sources = nlohmann::json::array();
  for (const FigurePanel& panel : spec.panels) {
    labels.push_back(panel.label);
    values.push_back(panel.p_tau);
    sources.push_back(panel.source);
  }
  manifest["panel_labels"] = labels;
  manifest["panel_p_tau"] = values;
  manifest["panel_p_tau_source"] = sources;
  if (spec.kind == FigureKind::optimum_vs_p_tau) {
    manifest["c_max"] = max_concurrence(spec.omega, *spec.temperature);
    manifest["optimizer_grid_resolution"] = options.grid_resolution;
    manifest["optimizer_refinement_tolerance"] = options.refinement_tolerance;
  }
  manifest["quadrature_tolerance"] = kQuadratureTolerance;
  manifest["quadrature_max_depth"] = kQuadratureMaxDepth;
  manifest["quadrature_kink_node"] = 0.5;
  manifest["csv_significant_digits"] = 12;
  manifest["files"] = file_names;
  manifest["version"] = QSLT_VERSION;

  const auto manifest_path = directory / (stem + "_manifest.json");
  write_file(manifest_path, manifest.dump(2) + "\n");
  written.push_back(manifest_path);
  return written;
}

}  // namespace qsl::cli
