#pragma once

#include <cmath>

namespace qsl {

struct ScalarMinimum {
  double x;
  double value;
  int iterations;
};

// Derivative-free minimization of a unimodal f on [a, b]. Stops once the
// bracket is narrower than `width`; one new evaluation per iteration.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double a, double b, double width, int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (b - a > width && it < max_iterations) {
    ++it;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  // Report the best point actually seen.
  if (fc <= fx && fc <= fd) return {c, fc, it};
  if (fd < fx) return {d, fd, it};
  return {x, fx, it};
}

}  // namespace qsl
