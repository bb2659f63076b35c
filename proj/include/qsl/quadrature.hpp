#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>

namespace qsl {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  std::size_t evaluations = 0;
};

namespace detail {

template <typename F>
struct SimpsonState {
  F& f;
  QuadratureResult result;

  double eval(double x) {
    ++result.evaluations;
    return f(x);
  }

  // Integrates over [a, b] given f at a, mid, b and the coarse estimate.
  double refine(double a, double fa, double m, double fm, double b, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || !(m > a && b > m)) {
      result.error_estimate += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth <= 0) {
      result.converged = false;
      result.error_estimate += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
  }
};

}  // namespace detail

// Adaptive Simpson with Richardson correction. A subinterval is accepted when
// |S_fine - S_coarse| <= 15 tol; tolerances halve with each bisection. At
// max_depth the best estimate is kept and `converged` is cleared.
template <typename F>
QuadratureResult adaptive_simpson(F&& f, double lo, double hi, double tolerance, int max_depth = 40) {
  detail::SimpsonState<std::remove_reference_t<F>> state{f, {}};
  if (hi == lo) return state.result;
  const double fa = state.eval(lo);
  const double fb = state.eval(hi);
  const double mid = 0.5 * (lo + hi);
  const double fm = state.eval(mid);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  state.result.value = state.refine(lo, fa, mid, fm, hi, fb, whole, tolerance, max_depth);
  return state.result;
}

// Integrates over [lo, hi] with mandatory nodes at every breakpoint that lies
// strictly inside. The tolerance is shared out in proportion to length.
template <typename F>
QuadratureResult adaptive_simpson_piecewise(F&& f, double lo, double hi, std::span<const double> breakpoints,
                                            double tolerance, int max_depth = 40) {
  QuadratureResult total;
  double left = lo;
  auto add_piece = [&](double a, double b) {
    if (b <= a) return;
    const double share = tolerance * (b - a) / (hi - lo);
    const QuadratureResult piece = adaptive_simpson(f, a, b, share, max_depth);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.converged = total.converged && piece.converged;
    total.evaluations += piece.evaluations;
  };
  for (double cut : breakpoints) {
    if (cut > left && cut < hi) {
      add_piece(left, cut);
      left = cut;
    }
  }
  add_piece(left, hi);
  return total;
}

}  // namespace qsl
