#include "qsl/cli/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsl/channels.hpp"
#include "qsl/spacetime.hpp"

namespace qsl::cli {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

SelftestCheck check(std::string name, double worst, double tolerance) {
  return {std::move(name), worst, tolerance, worst <= tolerance};
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> out;

  double embed = 0.0;
  for (double a : {0.0, 0.25, kInvSqrt2, 1.0}) {
    for (double t : {0.1, 1.0, 3.0, 10.0}) {
      for (double w : {0.5, 1.0, 2.0}) {
        const Scenario s = Scenario::create(a, w, t);
        embed = std::max(embed, max_abs_diff(physical_state(s).matrix(), kruskal_embed_and_trace(s).matrix()));
      }
    }
  }
  out.push_back(check("kruskal embedding matches direct state", embed, 1e-13));

  for (ChannelKind kind : kAllChannels) {
    double worst = 0.0;
    for (double a : {0.0, 0.25, kInvSqrt2, 1.0}) {
      for (double t : {0.5, 1.0, 3.0, 10.0}) {
        const Scenario s = Scenario::create(a, 1.0, t);
        const DensityMatrix rho = physical_state(s);
        for (int i = 0; i <= 10; ++i) {
          const double p = i / 10.0;
          const DensityMatrix kraus = apply_channel(rho, ChannelSpec::create(kind, p));
          worst = std::max(worst, max_abs_diff(kraus.matrix(), closed_form(kind, s, p).matrix()));
        }
      }
    }
    out.push_back(check("Kraus sum matches closed form (" + std::string(to_string(kind)) + ")", worst, 1e-12));
  }

  for (ChannelKind kind : kAllChannels) {
    double worst = 0.0;
    const Scenario s = Scenario::create(0.25, 1.0, 3.0);
    for (double p : {0.1, 0.37, 0.5, 0.8}) {
      constexpr double h = 1e-6;
      const CMatrix fd = (closed_form(kind, s, p + h).matrix() - closed_form(kind, s, p - h).matrix()) * (0.5 / h);
      worst = std::max(worst, max_abs_diff(fd, drho_dp(kind, s, p)));
    }
    out.push_back(check("d rho/dp matches finite differences (" + std::string(to_string(kind)) + ")", worst, 1e-6));
  }
  return out;
}

}  // namespace qsl::cli
