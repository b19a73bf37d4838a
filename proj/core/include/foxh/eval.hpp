#pragma once

#include <functional>

#include "foxh/hfun_spec.hpp"

namespace foxh {

/// Vertical-line contour for Mellin-Barnes quadrature.  The abscissa must
/// separate the left pole lattices from the right ones.
struct ContourSpec {
  double abscissa;
  double half_height;  // truncation T of the integration range [-T, T]
  int nodes;           // base node count at refinement level 0 (>= 32)
  double tol;
};

/// Plans a contour: abscissa at the midpoint of the pole gap (window capped
/// to width 1 on the open side when one family is empty), truncation from the
/// exp(-pi D |t| / 2) kernel decay so the discarded tail is below tol/100.
/// Throws precondition_error when the lattices admit no separating line and
/// convergence_error when D <= 0 (no decay along the line).
ContourSpec choose_contour(const HFunctionSpec& spec, double tol);

struct HEvalResult {
  double value = 0.0;
  double error = 0.0;          // last refinement difference + tail bound
  double imag_residual = 0.0;  // |Im| of the contour integral; consistency alarm
  long nodes = 0;
  bool tolerance_met = false;
};

/// H(z) for z > 0 by Gauss-Legendre panels along the contour, doubling the
/// panel count until two successive estimates agree to contour.tol.
HEvalResult eval_h(const HFunctionSpec& spec, double z, const ContourSpec& contour);
HEvalResult eval_h(const HFunctionSpec& spec, double z, double tol = 1e-10);

struct SeriesResult {
  double value = 0.0;
  double error = 0.0;
  long terms = 0;
  bool tolerance_met = false;
};

/// H(z) as the sum of residues over the left pole lattices (requires simple
/// poles).  Valid for C > 0, or C == 0 with z below series_boundary(spec).
/// Negative z is accepted only when every exponent is an integer.
SeriesResult eval_h_series(const HFunctionSpec& spec, double z, double tol = 1e-12);

/// One residue-series term: H(z) = sum_k coef_k * z^{exp_k} with
/// coef = sign * exp(log_abs).
struct ResidueTerm {
  double exponent;
  double log_abs;
  double sign;
};

/// Streams residue terms in ascending exponent order into `sink`; stops when
/// the sink returns false or max_terms is reached.  Throws pole_error when two
/// lattice points collide within 1e-10 (higher-order pole).
void for_each_left_residue(const HFunctionSpec& spec, long max_terms,
                           const std::function<bool(const ResidueTerm&)>& sink);

enum class Regime { Zero, Infinity };

/// Power-law order of H at 0 (min a_j / A_j over the left family) or at
/// infinity (min (b_j - 1) / B_j over the right family).  Throws
/// precondition_error when the regime condition on C / D fails or the family
/// is empty.
double asymptotic_exponent(const HFunctionSpec& spec, Regime regime);

}  // namespace foxh
