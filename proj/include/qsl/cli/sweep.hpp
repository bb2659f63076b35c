#pragma once

#include <string>
#include <vector>

#include "qsl/cli/config.hpp"
#include "qsl/qslt.hpp"

namespace qsl::cli {

struct SweepRow {
  double axis_value = 0.0;
  // Alpha actually used for the row (resolved from a concurrence if needed).
  double alpha = 0.0;
  QsltResult result;
};

struct Dataset {
  std::string axis_name;
  std::vector<SweepRow> rows;
};

// Evenly spaced axis points; the last point is exactly `hi`.
std::vector<double> linspace(double lo, double hi, int count);

// Rows come back in ascending axis order. Rows whose quadrature did not
// converge are kept with result.converged == false.
Dataset run_sweep(const SweepConfig& config);

}  // namespace qsl::cli
