#include "qsl/entanglement.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "qsl/errors.hpp"
#include "qsl/golden_section.hpp"
#include "qsl/parallel.hpp"

namespace qsl {

namespace {

// Relative slack when comparing a requested C against c_max, so a grid end
// point computed as c_max * k / k is not rejected.
constexpr double kCmaxSlack = 1e-12;

}  // namespace

std::string_view to_string(Branch branch) noexcept { return branch == Branch::lower ? "lower" : "upper"; }

Branch parse_branch(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "lower") return Branch::lower;
  if (lower == "upper") return Branch::upper;
  throw InputError("unknown branch '" + std::string(text) + "' (expected lower or upper)");
}

double gm_concurrence(const Scenario& scenario) {
  return 2.0 * scenario.alpha() * scenario.beta() * scenario.kruskal().m;
}

double max_concurrence(double omega, double temperature) { return kruskal_coeffs(omega, temperature).m; }

double alpha_from_concurrence(double c, double omega, double temperature, Branch branch) {
  const double c_max = max_concurrence(omega, temperature);
  if (!(c >= 0.0) || c > c_max * (1.0 + kCmaxSlack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "concurrence = " << c << " violates [0, c_max] with c_max = " << c_max;
    throw InputError(msg.str());
  }
  const double r = std::min(c / c_max, 1.0);
  // 4 alpha^2 (1 - alpha^2) = r^2.
  const double root = std::sqrt((1.0 - r) * (1.0 + r));
  // Lower branch alpha^2 = (1 - root) / 2, written as r^2 / (2 (1 + root)) to
  // avoid cancellation near r = 0.
  if (branch == Branch::lower) return std::sqrt(0.5 * r * r / (1.0 + root));
  return std::sqrt(0.5 * (1.0 + root));
}

ConcurrenceMap ConcurrenceMap::create(double omega, double temperature, Branch branch) {
  return {omega, temperature, max_concurrence(omega, temperature), branch};
}

std::vector<ConcurrencePoint> ratio_vs_concurrence(ChannelKind kind, double omega, double temperature, double p_tau,
                                                   std::span<const double> c_grid, Branch branch) {
  const ConcurrenceMap map = ConcurrenceMap::create(omega, temperature, branch);
  for (double c : c_grid) (void)map.alpha(c);
  return parallel_map<ConcurrencePoint>(c_grid.size(), [&](std::size_t i) {
    const double alpha = map.alpha(c_grid[i]);
    return ConcurrencePoint{c_grid[i], alpha, qslt_ratio(kind, Scenario::create(alpha, omega, temperature), p_tau)};
  });
}

std::string_view to_string(OptimumLocation location) noexcept {
  switch (location) {
    case OptimumLocation::interior: return "interior";
    case OptimumLocation::at_zero: return "at_zero";
    case OptimumLocation::at_cmax: return "at_cmax";
    case OptimumLocation::degenerate: return "degenerate";
  }
  return "?";
}

OptimalCResult optimal_concurrence(ChannelKind kind, double omega, double temperature, double p_tau,
                                   const OptimizerOptions& options) {
  if (options.grid_resolution < 3) throw InputError("optimal_concurrence: grid_resolution must be at least 3");
  if (!(options.refinement_tolerance > 0.0)) throw InputError("optimal_concurrence: refinement_tolerance must be > 0");

  const ConcurrenceMap map = ConcurrenceMap::create(omega, temperature, options.branch);
  OptimalCResult out;
  out.grid_resolution = options.grid_resolution;
  out.refinement_tolerance = options.refinement_tolerance;
  out.c_max = map.c_max;

  if (kind == ChannelKind::pfc) {
    const QsltResult r = qslt_ratio(kind, map.scenario(map.c_max), p_tau);
    out.c_op = map.c_max;
    out.ratio_min = r.ratio;
    out.boundary = OptimumLocation::degenerate;
    out.converged = r.converged;
    return out;
  }

  const std::size_t n = static_cast<std::size_t>(options.grid_resolution);
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = map.c_max * static_cast<double>(i) / static_cast<double>(n - 1);
  grid.back() = map.c_max;

  const auto scan = ratio_vs_concurrence(kind, omega, temperature, p_tau, grid, options.branch);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.converged = out.converged && scan[i].result.converged;
    if (scan[i].result.ratio < scan[best].result.ratio) best = i;
  }

  out.c_op = grid[best];
  out.ratio_min = scan[best].result.ratio;
  if (best == 0) {
    out.boundary = OptimumLocation::at_zero;
    return out;
  }
  if (best == n - 1) {
    out.boundary = OptimumLocation::at_cmax;
    return out;
  }

  bool refined_converged = true;
  auto objective = [&](double c) {
    const QsltResult r = qslt_ratio(kind, map.scenario(c), p_tau);
    refined_converged = refined_converged && r.converged;
    return r.ratio;
  };
  const ScalarMinimum refined =
      golden_section_minimize(objective, grid[best - 1], grid[best + 1], options.refinement_tolerance);
  out.boundary = OptimumLocation::interior;
  out.refinement_iterations = refined.iterations;
  out.converged = out.converged && refined_converged;
  if (refined.value < out.ratio_min) {
    out.c_op = refined.x;
    out.ratio_min = refined.value;
  }
  return out;
}

}  // namespace qsl
