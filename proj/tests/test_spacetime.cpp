#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qsl/errors.hpp"
#include "qsl/qmatrix.hpp"
#include "qsl/spacetime.hpp"

using namespace qsl;

TEST_CASE("hawking_temperature") {
  CHECK(hawking_temperature(1.0) == doctest::Approx(1.0 / (8.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(hawking_temperature(1.0) == doctest::Approx(0.039789).epsilon(1e-5));
  CHECK(hawking_temperature(2.0) == doctest::Approx(0.5 * hawking_temperature(1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(hawking_temperature(0.0), InputError);
  CHECK_THROWS_AS(hawking_temperature(-1.0), InputError);
}

TEST_CASE("kruskal_coeffs") {
  SUBCASE("zero temperature") {
    const KruskalCoeffs k = kruskal_coeffs(1.0, 0.0);
    CHECK(k.m == 1.0);
    CHECK(k.n == 0.0);
  }
  SUBCASE("infinite temperature") {
    const KruskalCoeffs k = kruskal_coeffs(1.0, std::numeric_limits<double>::infinity());
    CHECK(k.m == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-15));
    CHECK(k.n == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-15));
  }
  SUBCASE("omega = T = 1") {
    const KruskalCoeffs k = kruskal_coeffs(1.0, 1.0);
    CHECK(k.m == doctest::Approx(1.0 / std::sqrt(1.0 + std::exp(-1.0))).epsilon(1e-15));
    CHECK(k.n == doctest::Approx(1.0 / std::sqrt(1.0 + std::exp(1.0))).epsilon(1e-15));
  }
  SUBCASE("extreme ratios stay finite") {
    const KruskalCoeffs cold = kruskal_coeffs(1.0, 1e-6);
    CHECK(cold.m == 1.0);
    CHECK(cold.n == 0.0);
    const KruskalCoeffs hot = kruskal_coeffs(1e-300, 1e300);
    CHECK(std::isfinite(hot.m));
    CHECK(hot.m == doctest::Approx(std::numbers::sqrt2 / 2.0));
  }
  SUBCASE("normalization and ordering") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> log_u(-4.0, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
      const double omega = std::pow(10.0, log_u(rng));
      const double t = std::pow(10.0, log_u(rng));
      const KruskalCoeffs k = kruskal_coeffs(omega, t);
      CHECK(std::abs(k.m * k.m + k.n * k.n - 1.0) <= 1e-14);
      CHECK(k.m >= k.n);
      CHECK(k.m >= std::numbers::sqrt2 / 2.0 - 1e-16);
    }
  }
  SUBCASE("m decreases with temperature") {
    double previous = 1.0;
    for (double t = 0.1; t <= 10.0; t += 0.1) {
      const double m = kruskal_coeffs(1.0, t).m;
      CHECK(m < previous);
      previous = m;
    }
  }
  CHECK_THROWS_AS(kruskal_coeffs(0.0, 1.0), InputError);
  CHECK_THROWS_AS(kruskal_coeffs(1.0, -1.0), InputError);
  CHECK_THROWS_AS(kruskal_coeffs(std::nan(""), 1.0), InputError);
}

TEST_CASE("Scenario validation") {
  const Scenario s = Scenario::create(0.25, 1.0, 3.0);
  CHECK(s.alpha() == 0.25);
  CHECK(s.beta() == doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-15));
  CHECK_FALSE(s.mass().has_value());

  CHECK_THROWS_AS(Scenario::create(1.5, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(Scenario::create(-0.1, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(Scenario::create(0.5, -1.0, 1.0), InputError);
  CHECK_THROWS_AS(Scenario::create(0.5, 1.0, -1.0), InputError);

  const Scenario from_mass = Scenario::from_mass(0.5, 1.0, 1.0);
  CHECK(from_mass.temperature() == doctest::Approx(0.039789).epsilon(1e-5));
  REQUIRE(from_mass.mass().has_value());
  CHECK(*from_mass.mass() == 1.0);

  CHECK_NOTHROW(Scenario::create(0.5, 1.0, hawking_temperature(2.0), 2.0));
  CHECK_THROWS_AS(Scenario::create(0.5, 1.0, 1.0, 2.0), InputError);
}

TEST_CASE("physical_state") {
  const Scenario s = Scenario::create(0.25, 1.0, 3.0);
  const KruskalCoeffs k = s.kruskal();
  const DensityMatrix rho = physical_state(s);
  const double a2 = 0.0625;
  const double b2 = 15.0 / 16.0;
  CHECK(rho(0, 0).real() == doctest::Approx(a2 * k.m * k.m).epsilon(1e-15));
  CHECK(rho(1, 1).real() == doctest::Approx(a2 * k.n * k.n).epsilon(1e-15));
  CHECK(rho(7, 7).real() == doctest::Approx(b2).epsilon(1e-15));
  CHECK(rho(0, 7).real() == doctest::Approx(0.25 * std::sqrt(b2) * k.m).epsilon(1e-15));
  CHECK(rho(7, 0) == rho(0, 7));
  // Only five entries are nonzero.
  int nonzero = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) nonzero += rho(i, j) != Complex{} ? 1 : 0;
  CHECK(nonzero == 5);

  SUBCASE("zero temperature is the pure GHZ-type state") {
    const DensityMatrix pure = physical_state(Scenario::create(0.25, 1.0, 0.0));
    CHECK(hs_norm(pure.matrix() * pure.matrix() - pure.matrix()) <= 1e-15);
  }
}

TEST_CASE("Kruskal embedding agrees with the direct state") {
  const double t_grid[] = {0.0, 0.1, 1.0, 3.0, 10.0, 1e6};
  for (double alpha = 0.0; alpha <= 1.0 + 1e-12; alpha += 0.05) {
    for (double t : t_grid) {
      for (double omega : {0.5, 1.0, 2.0}) {
        const Scenario s = Scenario::create(std::min(alpha, 1.0), omega, t);
        CHECK(max_abs_diff(physical_state(s).matrix(), kruskal_embed_and_trace(s).matrix()) <= 1e-14);
      }
    }
  }
}

TEST_CASE("physical_state limits") {
  SUBCASE("alpha = 1 is a product state") {
    const Scenario s = Scenario::create(1.0, 1.0, 3.0);
    const auto [m, n] = s.kruskal();
    CMatrix expected(8);
    expected(0b000, 0b000) = m * m;
    expected(0b001, 0b001) = n * n;
    CHECK(max_abs_diff(physical_state(s).matrix(), expected) <= 1e-15);
    CHECK(max_abs_diff(kruskal_embed_and_trace(s).matrix(), expected) <= 1e-15);
  }
  SUBCASE("alpha = 0 is |111>") {
    CMatrix expected(8);
    expected(0b111, 0b111) = 1.0;
    CHECK(max_abs_diff(physical_state(Scenario::create(0.0, 1.0, 3.0)).matrix(), expected) == 0.0);
  }
  SUBCASE("infinite temperature at alpha = 1/sqrt2") {
    const Scenario s = Scenario::create(std::numbers::sqrt2 / 2.0, 1.0, std::numeric_limits<double>::infinity());
    const DensityMatrix rho = kruskal_embed_and_trace(s);
    CHECK(rho(0b000, 0b000).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(rho(0b001, 0b001).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(rho(0b111, 0b111).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rho(0b000, 0b111).real() == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-14));
  }
}

TEST_CASE("physical_state properties") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> log_t(-3.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double alpha = u(rng);
    const double omega = 0.1 + 3.0 * u(rng);
    const double t = std::pow(10.0, log_t(rng));
    const Scenario s = Scenario::create(alpha, omega, t);
    CHECK(std::abs(physical_state(s).matrix().trace() - 1.0) <= 1e-14);
    const auto [m, n] = s.kruskal();
    CHECK(physical_state(s)(0b001, 0b001).real() == doctest::Approx(alpha * alpha * n * n).epsilon(1e-14));
  }
  // The |001> population grows with temperature.
  double previous = 0.0;
  for (double t = 1e-3; t <= 1e3; t *= 1.5) {
    const double pop = physical_state(Scenario::create(0.5, 1.0, t))(0b001, 0b001).real();
    CHECK(pop >= previous);
    previous = pop;
  }
  CHECK(physical_state(Scenario::create(0.5, 1.0, 1e-3))(0b001, 0b001).real() <= 1e-300);
}
