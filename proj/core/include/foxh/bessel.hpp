#pragma once

namespace foxh {

/// J_nu(x) for x >= 0.  Half-integer orders +-1/2 use the closed forms;
/// negative non-half orders go through J_{-nu}, Y_{-nu}.
double bessel_j(double nu, double x);

/// Normalized kernel 2^nu Gamma(nu+1) J_nu(|x|) / |x|^nu, value 1 at x = 0.
/// Even in x; defined for nu > -1/2 (and nu = -1/2, where it equals cos x).
double rescaled_bessel_j(double nu, double x);

/// McMahon approximation to the k-th positive zero of J_nu (k >= 1); adequate
/// for oscillation-cell splitting.
double bessel_zero_approx(double nu, int k);

}  // namespace foxh
