#pragma once

#include <complex>

#include "foxh/errors.hpp"

namespace foxh {

using cplx = std::complex<double>;

/// Distance below which an argument counts as sitting on a pole of Gamma.
inline constexpr double kPoleTol = 1e-13;

/// True when x is within tol of a non-positive integer.
bool near_nonpositive_integer(double x, double tol = kPoleTol);

/// log Gamma(z) with exp(log_gamma(z)) == Gamma(z).  Conjugate-symmetric:
/// log_gamma(conj z) == conj(log_gamma(z)).  Lanczos fit for Re z >= 0.5,
/// reflection otherwise.  Throws pole_error at non-positive integers.
cplx log_gamma(cplx z);

/// Gamma(z).  Throws pole_error at non-positive integers and overflow_error
/// when |Re log Gamma| exceeds the double exponent range.
cplx gamma(cplx z);

/// Rising factorial (tau)_k = tau (tau+1) ... (tau+k-1), (tau)_0 = 1.
cplx pochhammer(cplx tau, unsigned k);

/// Magnitude/sign decomposition: value = sign * exp(log_abs).
/// sign == 0 flags a pole (log_abs = +inf); 1/Gamma is 0 there.
struct SignedLog {
  double log_abs;
  double sign;
  bool finite() const { return sign != 0.0; }
};

/// log |Gamma(x)| and sign(Gamma(x)) on the real axis.  Never throws; a pole
/// is reported as {+inf, 0}.
SignedLog signed_log_gamma(double x);

}  // namespace foxh
