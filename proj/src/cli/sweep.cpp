#include "qsl/cli/sweep.hpp"

#include "qsl/entanglement.hpp"
#include "qsl/errors.hpp"
#include "qsl/parallel.hpp"

namespace qsl::cli {

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw InputError("count: must be at least 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  out.back() = hi;
  return out;
}

Dataset run_sweep(const SweepConfig& config) {
  config.validate();
  const auto [lo, hi] = config.range();
  const std::vector<double> axis = linspace(lo, hi, config.count);
  const std::optional<double> fixed_t = config.effective_temperature();

  auto row_at = [&](std::size_t i) {
    const double x = axis[i];
    double temperature = fixed_t.value_or(0.0);
    double p_tau = config.p_tau.value_or(0.0);
    double alpha = config.alpha.value_or(0.0);
    switch (config.axis) {
      case Axis::temperature: temperature = x; break;
      case Axis::p_tau: p_tau = x; break;
      case Axis::alpha: alpha = x; break;
      case Axis::concurrence:
        alpha = alpha_from_concurrence(std::min(x, max_concurrence(config.omega, temperature)), config.omega,
                                       temperature, config.branch);
        break;
    }
    if (config.axis != Axis::concurrence && config.concurrence) {
      alpha = alpha_from_concurrence(*config.concurrence, config.omega, temperature, config.branch);
    }
    const Scenario scenario = Scenario::create(alpha, config.omega, temperature);
    return SweepRow{x, alpha, qslt_ratio(config.channel, scenario, p_tau)};
  };

  Dataset out;
  out.axis_name = std::string(to_string(config.axis));
  out.rows = parallel_map<SweepRow>(axis.size(), row_at);
  return out;
}

}  // namespace qsl::cli
