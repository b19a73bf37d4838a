#pragma once

#include <functional>

namespace foxh {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  long evals = 0;
  bool converged = false;
};

/// Adaptive Gauss(7)/Kronrod(15) on [a, b].
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol = 1e-12, int max_intervals = 4000);

/// Single fixed 16-point Gauss-Legendre panel on [a, b].
double gauss_panel16(const std::function<double(double)>& f, double a, double b);

/// Sum of integrals over consecutive cells [edge(k), edge(k+1)), k = 0, 1, ...
/// with Wynn epsilon acceleration of the partial sums; intended for
/// integrands whose cell contributions eventually alternate in sign
/// (oscillatory Bessel tails).  Converged when two successive accelerated
/// estimates agree to tol.
QuadResult integrate_cells_accelerated(const std::function<double(double)>& f,
                                       const std::function<double(int)>& edge, double tol,
                                       int max_cells = 200);

/// Limit estimate of the partial-sum sequence s[0..len) by the epsilon
/// algorithm (even columns).  Falls back to the last entry when degenerate.
double wynn_epsilon_limit(const double* s, int len);

}  // namespace foxh
