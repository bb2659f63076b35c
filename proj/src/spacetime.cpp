#include "qsl/spacetime.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

constexpr double kMassConsistency = 1e-12;

std::string describe(const char* name, double value, const char* constraint) {
  std::ostringstream out;
  out << name << " = " << value << " violates " << constraint;
  return out.str();
}

}  // namespace

double hawking_temperature(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InputError(describe("mass", mass, "M > 0"));
  return 1.0 / (8.0 * std::numbers::pi * mass);
}

KruskalCoeffs kruskal_coeffs(double omega, double temperature) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InputError(describe("omega", omega, "omega > 0"));
  if (!(temperature >= 0.0)) throw InputError(describe("temperature", temperature, "T >= 0"));
  if (temperature == 0.0) return {1.0, 0.0};
  if (std::isinf(temperature)) return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
  // Written with e^{-w/T} only, which never overflows.
  const double boltzmann = std::exp(-omega / temperature);
  const double norm = std::sqrt(1.0 + boltzmann);
  return {1.0 / norm, std::sqrt(boltzmann) / norm};
}

Scenario Scenario::create(double alpha, double omega, double temperature, std::optional<double> mass) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError(describe("alpha", alpha, "[0, 1]"));
  Scenario s;
  s.kruskal_ = kruskal_coeffs(omega, temperature);
  if (mass) {
    const double implied = hawking_temperature(*mass);
    if (std::abs(implied - temperature) > kMassConsistency * temperature) {
      std::ostringstream msg;
      msg << "mass = " << *mass << " implies T = " << implied << ", inconsistent with temperature = " << temperature;
      throw InputError(msg.str());
    }
  }
  s.alpha_ = alpha;
  s.beta_ = std::sqrt(1.0 - alpha * alpha);
  s.omega_ = omega;
  s.temperature_ = temperature;
  s.mass_ = mass;
  return s;
}

Scenario Scenario::from_mass(double alpha, double omega, double mass) {
  return create(alpha, omega, hawking_temperature(mass), mass);
}

DensityMatrix physical_state(const Scenario& scenario) {
  const double a = scenario.alpha();
  const double b = scenario.beta();
  const auto [m, n] = scenario.kruskal();
  CMatrix rho(8);
  rho(0b000, 0b000) = a * a * m * m;
  rho(0b001, 0b001) = a * a * n * n;
  rho(0b111, 0b111) = b * b;
  rho(0b000, 0b111) = a * m * b;
  rho(0b111, 0b000) = a * m * b;
  return DensityMatrix::from(rho);
}

DensityMatrix kruskal_embed_and_trace(const Scenario& scenario) {
  const double a = scenario.alpha();
  const double b = scenario.beta();
  const auto [m, n] = scenario.kruskal();

  // Four-qubit ket over |A B C_I C_II>, index 8A + 4B + 2C_I + C_II.
  auto index = [](int qa, int qb, int qc, int qii) { return std::size_t(8 * qa + 4 * qb + 2 * qc + qii); };
  std::array<Complex, 16> ket{};
  // alpha |00>|0>_K
  ket[index(0, 0, 0, 0)] += a * m;
  ket[index(0, 0, 1, 1)] += a * n;
  // beta |11>|1>_K
  ket[index(1, 1, 1, 0)] += b;

  return DensityMatrix::from(partial_trace_projector(ket, 3));
}

}  // namespace qsl
