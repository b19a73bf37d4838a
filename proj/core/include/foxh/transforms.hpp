#pragma once

#include <map>
#include <string>

#include "foxh/eval.hpp"
#include "foxh/hfun_spec.hpp"

namespace foxh {

// ---- Laplace transform -------------------------------------------------

/// Closed-form Laplace image: L{H}(s) = (1/s) * H_image(1/s).  Requires
/// D > 0 (or D = 0 with C >= 0) and min_j(a_j / A_j) + 1 > 0 over the left
/// family.  The image prepends (0, 1) to the lower row and raises m.
HFunctionSpec laplace_of_h(const HFunctionSpec& spec);

/// Value of the image relation at s > 0.
double eval_laplace_image(const HFunctionSpec& image, double s, double tol = 1e-9);

/// Independent check: tail-bounded quadrature of Int_0^inf e^{-st} H(t) dt.
double laplace_numeric(const HFunctionSpec& spec, double s, double tol = 1e-7);

// ---- Hankel transform --------------------------------------------------

/// Closed-form Hankel image:
///   Int_0^inf r^{rho-1} J_nu(x r) H[b r^sigma] dr
///     = 2^{rho-1} x^{-rho} H_image[b (2/x)^sigma].
/// The image gains (1 - (rho+nu)/2, sigma/2) in front of the lower row and
/// (1 - (rho-nu)/2, sigma/2) at its back; m grows by one.
struct HankelImage {
  HFunctionSpec spec;
  double rho_p;
  double sigma;
  double b;
  double prefactor(double x) const;
  double argument(double x) const;
};

HankelImage hankel_of_h(const HFunctionSpec& spec, double rho_p, double nu, double sigma,
                        double b = 1.0);

double eval_hankel_image(const HankelImage& image, double x, double tol = 1e-8);

struct OscillatoryResult {
  double value = 0.0;
  double error = 0.0;
  int cells = 0;
  bool tolerance_met = false;
};

/// Left side of the Hankel identity by cell-wise quadrature between
/// consecutive Bessel zeros with acceleration of the alternating partial
/// sums.  Throws convergence_error when no stable estimate emerges within
/// 200 cells; returns tolerance_met = false when the estimate stabilized
/// above tol.
OscillatoryResult hankel_numeric(const HFunctionSpec& spec, double rho_p, double nu, double sigma,
                                 double b, double x, double tol = 1e-6);

/// Radial Fourier transform in d dimensions of the profile r -> H(r):
///   |xi|^{(2-d)/2} Int_0^inf r^{d/2} J_{(d-2)/2}(r |xi|) H(r) dr.
double radial_fourier(const HFunctionSpec& spec, int d, double xi, double tol = 1e-6);

// ---- Integral representations (kernel H_{q,p}^{p,0}) --------------------

/// Kernel spec of the representation lemmas: all upper factors active
/// (n = p), none of the lower ones (m = 0).
HFunctionSpec representation_kernel(const FoxWrightSpec& fw);

/// Upper end of the kernel support: prod A^A * prod B^{-B}.  (The reciprocal
/// of the series radius formula; the two agree only for balanced weights.)
double support_radius(const FoxWrightSpec& fw);

/// Constants of the shifted representations.  `rho` is the support endpoint
/// used in the exponential shift e^{-rho z}; eta the measure atom
/// (2 pi)^{(p-q)/2} prod A^{a-1/2} prod B^{1/2-b}.
struct RepresentationConstants {
  double eta = 0.0;
  double rho = 0.0;
  std::optional<double> eta_variant;
  std::optional<double> rho_variant;
};

double representation_eta(const FoxWrightSpec& fw);

/// pPsi_q(z) = Int_0^rho e^{zt} K(t) dt / t for mu > 0, min(a_j/A_j) >= 1,
/// sum A = sum B.  Evaluated termwise through the kernel residue series.
double integral_rep_fw(const FoxWrightSpec& fw, double z, double tol = 1e-9);

/// Stieltjes form: p+1Psi_q[(sigma,1), a; b](-z) = Int_0^rho (1+tz)^{-sigma} dmu(t).
/// Asserts kernel non-negativity on a 200-point log grid before integrating.
double stieltjes_rep(const FoxWrightSpec& fw, double sigma, double z, double tol = 1e-9);

struct ExpShiftedRep {
  double value;  // Int_0^rho e^{-zt} dmu(t)
  RepresentationConstants constants;
};

/// mu = 0 case: pPsi_q(-z) - eta e^{-rho z} = Int_0^rho e^{-zt} dmu(t).
ExpShiftedRep exp_shifted_rep(const FoxWrightSpec& fw, double z, double tol = 1e-8);

// ---- Shift constants of the completely-monotone theorems ----------------

double eta1_constant(double tau, double d);
double eta2_constant(double alpha, double gamma, double d);
double rho2_constant(double alpha);
double eta3_constant(double alpha, double beta, double gamma);
double rho3_constant(double alpha, double beta);

/// Constants for a named hypothesis set ("H8" -> eta1 with shift exponent 2;
/// "H9" -> eta2/rho2; "H10" -> eta3/rho3).  Validates the set's constraints,
/// solving chained equalities for the dependent parameters first; throws
/// precondition_error naming the violated constraint.
RepresentationConstants hypothesis_constants(const std::string& theorem_id,
                                             const std::map<std::string, double>& params);

}  // namespace foxh
