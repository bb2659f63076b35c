#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qsl/cli/config.hpp"

namespace qsl::cli {

enum class FigureKind { ratio_vs_temperature, ratio_vs_concurrence, optimum_vs_p_tau };

struct FigurePanel {
  std::string label;  // "a" .. "d"; empty for single-curve figures
  double p_tau;
  // "caption" when the value is printed alongside the figure, otherwise
  // "scan-selected" (chosen from a trend scan to show the described regime).
  std::string source;
};

struct FigureSpec {
  FigureId id = FigureId::fig1;
  FigureKind kind = FigureKind::ratio_vs_temperature;
  ChannelKind channel = ChannelKind::dpc;
  double omega = 1.0;
  std::optional<double> alpha;        // temperature figures
  std::optional<double> temperature;  // concurrence and optimum figures
  Branch branch = Branch::lower;
  double axis_lo = 0.0;
  double axis_hi = 0.0;  // for concurrence figures: c_max
  int axis_count = 0;
  std::vector<FigurePanel> panels;
};

FigureSpec figure_spec(FigureId id);

// Writes one CSV per panel (or one for the optimum figures) plus
// <id>_manifest.json into `directory`. Returns the written paths, manifest last.
std::vector<std::filesystem::path> reproduce(const FigureSpec& spec, const std::filesystem::path& directory);

}  // namespace qsl::cli
