#include "qsl/qslt.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qsl/errors.hpp"
#include "qsl/parallel.hpp"

namespace qsl {

namespace {

constexpr std::array<double, 1> kKink = {0.5};

void require_p_tau(double p_tau) {
  if (!(p_tau >= 0.0 && p_tau <= 1.0)) {
    std::ostringstream msg;
    msg << "p_tau = " << p_tau << " violates [0, 1]";
    throw InputError(msg.str());
  }
}

double endpoint_distance(ChannelKind kind, const Scenario& scenario, double p_tau) {
  return hs_norm(physical_state(scenario).matrix() - closed_form(kind, scenario, p_tau).matrix());
}

QsltResult assemble(double distance, const QuadratureResult& path) {
  QsltResult r;
  r.distance = distance;
  r.path_length = path.value;
  r.quadrature_error_estimate = path.error_estimate;
  r.converged = path.converged;
  if (path.value <= kFrozenPathLength) {
    r.frozen = true;
    r.ratio = 1.0;
  } else {
    r.ratio = distance / path.value;
  }
  return r;
}

// Inverse of a strictly increasing map on [lo, hi] by bisection.
double invert(const MonotoneMap& clock, double s, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (clock.value(mid) < s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double hs_speed(ChannelKind kind, const Scenario& scenario, double p) {
  return hs_norm(drho_dp(kind, scenario, p));
}

QuadratureResult integrate_speed(ChannelKind kind, const Scenario& scenario, double p_tau) {
  require_p_tau(p_tau);
  auto speed = [&](double p) { return hs_speed(kind, scenario, p); };
  return adaptive_simpson_piecewise(speed, p_tau, 1.0, kKink, kQuadratureTolerance, kQuadratureMaxDepth);
}

QsltResult qslt_ratio(ChannelKind kind, const Scenario& scenario, double p_tau) {
  require_p_tau(p_tau);
  return assemble(endpoint_distance(kind, scenario, p_tau), integrate_speed(kind, scenario, p_tau));
}

double sqrt_quadratic_integral(double a, double b, double c, double lo, double hi) {
  const double disc = 4.0 * a * c - b * b;
  if (!(a > 0.0) || !(disc > 0.0)) throw InputError("sqrt_quadratic_integral: needs a > 0 and 4ac - b^2 > 0");
  auto antiderivative = [&](double x) {
    const double q = (a * x + b) * x + c;
    const double u = 2.0 * a * x + b;
    return u * std::sqrt(q) / (4.0 * a) + disc / (8.0 * a * std::sqrt(a)) * std::asinh(u / std::sqrt(disc));
  };
  return antiderivative(hi) - antiderivative(lo);
}

std::optional<double> closed_form_ratio(ChannelKind kind, const Scenario& scenario, double p_tau) {
  require_p_tau(p_tau);
  const double pt = p_tau;
  if (kind == ChannelKind::pfc) {
    // Product inputs never move under phase flips.
    if (scenario.alpha() * scenario.beta() == 0.0) return 1.0;
    if (pt >= 0.5) return 1.0;
    const double x = 2.0 * pt * (1.0 - pt);
    return x / (1.0 - x);
  }
  if (scenario.alpha() != 1.0) return std::nullopt;
  if (pt == 1.0) return 1.0;
  if (kind == ChannelKind::dpc) {
    // (1 - p)sqrt(11 + 8p(1 + p)) over the integral of sqrt(11 + 16p(2p - 1)).
    return (1.0 - pt) * std::sqrt(11.0 + 8.0 * pt * (1.0 + pt)) / sqrt_quadratic_integral(32.0, -16.0, 11.0, pt, 1.0);
  }
  // Bit flip and bit-phase flip: (1 - p)sqrt(1 + 2p^2) over the integral of sqrt(3 + 8p(p - 1)).
  return (1.0 - pt) * std::sqrt(1.0 + 2.0 * pt * pt) / sqrt_quadratic_integral(8.0, -8.0, 3.0, pt, 1.0);
}

double reparametrization_check(ChannelKind kind, const Scenario& scenario, double p_tau, const MonotoneMap& clock) {
  require_p_tau(p_tau);
  if (!clock.value || !clock.derivative) throw InputError("reparametrization_check: clock map is incomplete");

  constexpr int kSamples = 1000;
  double previous = clock.value(p_tau);
  for (int i = 1; i <= kSamples; ++i) {
    const double p = p_tau + (1.0 - p_tau) * i / kSamples;
    const double current = clock.value(p);
    if (!(current > previous) || !(clock.derivative(p) > 0.0)) {
      std::ostringstream msg;
      msg << "reparametrization_check: clock is not strictly increasing near p = " << p;
      throw InputError(msg.str());
    }
    previous = current;
  }

  const double s_lo = clock.value(p_tau);
  const double s_hi = clock.value(1.0);
  auto speed_in_s = [&](double s) {
    const double p = invert(clock, s, p_tau, 1.0);
    return hs_speed(kind, scenario, p) / clock.derivative(p);
  };
  const std::array<double, 1> kink = {clock.value(0.5)};
  const QuadratureResult path =
      adaptive_simpson_piecewise(speed_in_s, s_lo, s_hi, kink, kQuadratureTolerance, kQuadratureMaxDepth);
  return assemble(endpoint_distance(kind, scenario, p_tau), path).ratio;
}

std::string_view to_string(Trend trend) noexcept {
  switch (trend) {
    case Trend::increasing: return "increasing";
    case Trend::decreasing: return "decreasing";
    case Trend::constant: return "constant";
    case Trend::mixed: return "mixed";
  }
  return "?";
}

Trend classify_trend(std::span<const double> values, double flat) {
  bool up = true;
  bool down = true;
  bool level = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double step = values[i] - values[i - 1];
    up = up && step > 0.0;
    down = down && step < 0.0;
    level = level && std::abs(step) <= flat;
  }
  if (level) return Trend::constant;
  if (up) return Trend::increasing;
  if (down) return Trend::decreasing;
  return Trend::mixed;
}

std::vector<TrendScanRow> scan_temperature_trend(ChannelKind kind, double alpha, double omega,
                                                 std::span<const double> temperatures,
                                                 std::span<const double> p_taus) {
  if (temperatures.size() < 2) throw InputError("scan_temperature_trend: need at least two temperatures");
  return parallel_map<TrendScanRow>(p_taus.size(), [&](std::size_t i) {
    std::vector<double> ratios;
    ratios.reserve(temperatures.size());
    for (double t : temperatures) ratios.push_back(qslt_ratio(kind, Scenario::create(alpha, omega, t), p_taus[i]).ratio);
    return TrendScanRow{p_taus[i], classify_trend(ratios), ratios.front(), ratios.back()};
  });
}

}  // namespace qsl
