#pragma once

// Genuinely multipartite concurrence of the Hawking-dressed GHZ family and the
// search for the initial entanglement that minimizes the speed-limit ratio.

#include <span>
#include <string_view>
#include <vector>

#include "qsl/channels.hpp"
#include "qsl/qslt.hpp"

namespace qsl {

// Which alpha solves C(alpha) = c: C is symmetric under alpha <-> sqrt(1 - alpha^2).
enum class Branch { lower, upper };

std::string_view to_string(Branch branch) noexcept;
Branch parse_branch(std::string_view text);

// C = 2 alpha sqrt(1 - alpha^2) (1 + e^{-w/T})^{-1/2}.
double gm_concurrence(const Scenario& scenario);

// Largest reachable C, attained at alpha = 1/sqrt2; equals the Kruskal m.
double max_concurrence(double omega, double temperature);

// Throws InputError when c is negative or exceeds max_concurrence, quoting
// the attainable maximum.
double alpha_from_concurrence(double c, double omega, double temperature, Branch branch = Branch::lower);

struct ConcurrenceMap {
  double omega;
  double temperature;
  double c_max;
  Branch branch;

  static ConcurrenceMap create(double omega, double temperature, Branch branch = Branch::lower);
  [[nodiscard]] double alpha(double c) const { return alpha_from_concurrence(c, omega, temperature, branch); }
  [[nodiscard]] Scenario scenario(double c) const { return Scenario::create(alpha(c), omega, temperature); }
};

struct ConcurrencePoint {
  double concurrence;
  double alpha;
  QsltResult result;
};

std::vector<ConcurrencePoint> ratio_vs_concurrence(ChannelKind kind, double omega, double temperature, double p_tau,
                                                   std::span<const double> c_grid, Branch branch = Branch::lower);

enum class OptimumLocation { interior, at_zero, at_cmax, degenerate };

std::string_view to_string(OptimumLocation location) noexcept;

struct OptimizerOptions {
  int grid_resolution = 2001;
  double refinement_tolerance = 1e-6;
  Branch branch = Branch::lower;
};

struct OptimalCResult {
  double c_op = 0.0;
  double ratio_min = 1.0;
  OptimumLocation boundary = OptimumLocation::interior;
  int grid_resolution = 0;
  double refinement_tolerance = 0.0;
  double c_max = 0.0;
  // Golden-section iterations spent on an interior refinement.
  int refinement_iterations = 0;
  // All scan and refinement quadratures converged.
  bool converged = true;
};

// Uniform scan of [0, c_max] followed by golden-section refinement around the
// best grid point. Ties on the grid go to the smaller C. The phase flip ratio
// does not depend on C at all, so PFC yields a `degenerate` result reporting
// c_max and the common ratio of the entangled states.
OptimalCResult optimal_concurrence(ChannelKind kind, double omega, double temperature, double p_tau,
                                   const OptimizerOptions& options = {});

}  // namespace qsl
