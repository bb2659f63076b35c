#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qsl/channels.hpp"
#include "qsl/entanglement.hpp"

namespace qsl::cli {

enum class Axis { temperature, p_tau, concurrence, alpha };
enum class OutputFormat { csv, json };

std::string_view to_string(Axis axis) noexcept;
Axis parse_axis(std::string_view text);
std::string_view to_string(OutputFormat format) noexcept;
OutputFormat parse_format(std::string_view text);

// One-dimensional sweep of the speed-limit ratio. Exactly the parameters not
// on the axis must be fixed: the temperature axis needs alpha and p_tau, the
// p_tau axis needs a temperature (or mass) and alpha or concurrence, the
// concurrence axis needs a temperature and p_tau, the alpha axis a
// temperature and p_tau.
struct SweepConfig {
  ChannelKind channel = ChannelKind::dpc;
  Axis axis = Axis::temperature;
  // Empty range: [0, 1] for p_tau and alpha, [0, c_max] for concurrence.
  std::optional<double> lo;
  std::optional<double> hi;
  int count = 2;
  double omega = 1.0;
  std::optional<double> temperature;
  std::optional<double> mass;
  std::optional<double> alpha;
  std::optional<double> concurrence;
  std::optional<double> p_tau;
  Branch branch = Branch::lower;
  // Empty writes to stdout.
  std::string output;
  OutputFormat format = OutputFormat::csv;

  bool operator==(const SweepConfig&) const = default;

  // Throws InputError naming the offending field and its constraint.
  void validate() const;
  // Temperature from `temperature` or, failing that, `mass`.
  [[nodiscard]] std::optional<double> effective_temperature() const;
  // Resolved [lo, hi] for the axis.
  [[nodiscard]] std::pair<double, double> range() const;
};

enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6 };

std::string_view to_string(FigureId id) noexcept;
FigureId parse_figure_id(std::string_view text);

struct FigureRequest {
  FigureId id;
  // Directory for the CSV panels and the manifest.
  std::string output = ".";

  bool operator==(const FigureRequest&) const = default;
};

using ParsedConfig = std::variant<SweepConfig, FigureRequest>;

// Strict JSON config: unknown keys, wrong types and out-of-range values are
// rejected with the key named. Syntax errors carry line and column.
ParsedConfig parse_config(std::string_view text);
std::string serialize_config(const ParsedConfig& config);

}  // namespace qsl::cli
