#pragma once

#include "foxh/hfun_spec.hpp"

namespace foxh {

struct FwEvalResult {
  double value = 0.0;
  double error = 0.0;
  long terms = 0;
};

/// Direct series evaluation of pPsi_q at real z.  Terms are computed in the
/// log domain with sign tracking; truncation after three consecutive terms
/// below tol relative to the running sum, hard cap 1e5 terms.  A lower
/// parameter sitting on a Gamma pole zeroes the term (1/Gamma = 0).
/// Requires delta > 0, or delta == 0 with |z| < radius.
FwEvalResult eval_fw(const FoxWrightSpec& fw, double z, double tol = 1e-12);

/// Three-parameter Mittag-Leffler function
///   E^gamma_{alpha,beta}(z) = sum_k (gamma)_k z^k / (Gamma(beta + k alpha) k!),
/// alpha > 0.  Same truncation contract as eval_fw.
FwEvalResult mittag_leffler(double alpha, double beta, double gamma_p, double z,
                            double tol = 1e-12);

/// Reduction to the generalized hypergeometric form: for unit weights,
/// pPsi_q(z) = coefficient * pFq(a; b; z).
struct PfqReduction {
  double coefficient;
  std::vector<double> upper;
  std::vector<double> lower;
};

PfqReduction to_generalized_hypergeometric(const FoxWrightSpec& fw);

/// Series convergence/structure parameters (delta, radius, mu always set;
/// C/D/c/d from the H-image when the weights are strictly positive).
ConvergenceReport classify(const FoxWrightSpec& fw);

}  // namespace foxh
