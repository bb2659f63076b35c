#pragma once

// Euclidean quantum speed limit along a Pauli-channel trajectory.
//
//   tau_QSL / tau = ||rho(1) - rho(p_tau)||_hs / integral_{p_tau}^{1} ||d rho / dp||_hs dp
//
// The 1/tau of the time-averaged speed cancels against tau, and the path
// length is invariant under monotone reparametrization, so the decoherence
// parameter p itself serves as the clock. rho(1) is the noiseless
// Hawking-dressed state.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qsl/channels.hpp"
#include "qsl/quadrature.hpp"
#include "qsl/spacetime.hpp"

namespace qsl {

inline constexpr double kQuadratureTolerance = 1e-10;
inline constexpr int kQuadratureMaxDepth = 40;
// Path lengths at or below this are treated as frozen dynamics.
inline constexpr double kFrozenPathLength = 1e-14;

struct QsltResult {
  double distance = 0.0;
  double path_length = 0.0;
  // distance / path_length, or exactly 1 when frozen.
  double ratio = 1.0;
  bool frozen = false;
  double quadrature_error_estimate = 0.0;
  bool converged = true;
};

double hs_speed(ChannelKind kind, const Scenario& scenario, double p);

// Path length over [p_tau, 1], split at p = 1/2 where |1 - 2p| factors kink.
QuadratureResult integrate_speed(ChannelKind kind, const Scenario& scenario, double p_tau);

// Never throws on quadrature trouble: `converged` is cleared instead.
QsltResult qslt_ratio(ChannelKind kind, const Scenario& scenario, double p_tau);

// Analytic ratio where one is known: phase flip for any alpha, and the
// depolarizing, bit flip and bit-phase flip channels for the product input
// alpha = 1. Empty otherwise.
std::optional<double> closed_form_ratio(ChannelKind kind, const Scenario& scenario, double p_tau);

// Exact integral of sqrt(a p^2 + b p + c) over [lo, hi] for a > 0 and a
// positive discriminant 4ac - b^2.
double sqrt_quadratic_integral(double a, double b, double c, double lo, double hi);

// Smooth, strictly increasing clock s = value(p) with its derivative.
struct MonotoneMap {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

// Recomputes the ratio with the trajectory expressed in the clock s,
// integrating ||d rho / ds|| over [value(p_tau), value(1)]. Throws InputError
// if the map is not strictly increasing on [p_tau, 1].
double reparametrization_check(ChannelKind kind, const Scenario& scenario, double p_tau, const MonotoneMap& clock);

enum class Trend { increasing, decreasing, constant, mixed };

std::string_view to_string(Trend trend) noexcept;

// Strict monotonicity of a sequence; `constant` when every step is within
// `flat` of zero.
Trend classify_trend(std::span<const double> values, double flat = 0.0);

struct TrendScanRow {
  double p_tau;
  Trend trend;
  double ratio_first;
  double ratio_last;
};

// Direction in which the ratio moves with Hawking temperature, for each
// p_tau. Locates the p_tau values where the temperature dependence reverses.
std::vector<TrendScanRow> scan_temperature_trend(ChannelKind kind, double alpha, double omega,
                                                 std::span<const double> temperatures,
                                                 std::span<const double> p_taus);

}  // namespace qsl
