#pragma once

// Hawking-dressed GHZ-family state of three qubits.
//
// Alice and Bob stay in the asymptotically flat region; Charlie hovers near
// the horizon of a Schwarzschild black hole. Charlie's Kruskal vacuum and
// excited states are
//
//   |0>_K = m |0>_I |0>_II + n |1>_I |1>_II,   |1>_K = |1>_I |0>_II,
//
// with m = (e^{-w/T} + 1)^{-1/2} and n = (e^{w/T} + 1)^{-1/2}. Tracing out the
// interior region II leaves the physically accessible state of A, B, C_I.
// Natural units throughout (G = c = hbar = k_B = 1).

#include <optional>

#include "qsl/qmatrix.hpp"

namespace qsl {

struct KruskalCoeffs {
  double m;  // vacuum amplitude, in (1/sqrt2, 1]
  double n;  // pair-creation amplitude, in [0, 1/sqrt2)
};

// T = 1 / (8 pi M).
double hawking_temperature(double mass);

// T == 0 is accepted and returns the zero-temperature limit (1, 0).
KruskalCoeffs kruskal_coeffs(double omega, double temperature);

class Scenario {
 public:
  // alpha in [0, 1], omega > 0, temperature >= 0. When a mass is also given
  // it must reproduce the temperature to 1e-12 relative.
  static Scenario create(double alpha, double omega, double temperature, std::optional<double> mass = std::nullopt);
  static Scenario from_mass(double alpha, double omega, double mass);

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }
  [[nodiscard]] double omega() const noexcept { return omega_; }
  [[nodiscard]] double temperature() const noexcept { return temperature_; }
  [[nodiscard]] std::optional<double> mass() const noexcept { return mass_; }
  [[nodiscard]] const KruskalCoeffs& kruskal() const noexcept { return kruskal_; }

 private:
  Scenario() = default;

  double alpha_ = 0.0;
  double beta_ = 0.0;
  double omega_ = 0.0;
  double temperature_ = 0.0;
  std::optional<double> mass_;
  KruskalCoeffs kruskal_{1.0, 0.0};
};

// rho_{ABC_I} written down directly from its four nonzero structures.
DensityMatrix physical_state(const Scenario& scenario);

// Same state built the long way: expand Charlie's qubit into Kruskal modes,
// form the four-qubit pure state (region II last) and trace region II out.
DensityMatrix kruskal_embed_and_trace(const Scenario& scenario);

}  // namespace qsl
