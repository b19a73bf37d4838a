#include "foxh/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "foxh/bessel.hpp"
#include "foxh/fox_wright.hpp"
#include "foxh/quadrature.hpp"

namespace foxh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double min_upper_ratio(const HFunctionSpec& spec) {
  double c = std::numeric_limits<double>::infinity();
  for (int j = 0; j < spec.n(); ++j)
    c = std::min(c, spec.upper()[j].a / spec.upper()[j].A);
  return c;
}

// Int_0^1 e^{w u} u^{e-1} du, entire in w; plain series in w.
double exp_moment(double e, double w) {
  double term = 1.0 / e;
  double sum = term;
  for (int j = 1; j < 300; ++j) {
    term *= w / j;
    const double add = term * (e / (e + j)) / e;  // w^j / (j! (e+j))
    sum += add;
    if (std::abs(add) < 1e-17 * std::max(1.0, std::abs(sum)) && j > 4) break;
  }
  return sum;
}

// Int_0^1 (1 + c u)^{-sigma} u^{e-1} du via the substitution u = v^{1/e}.
double stieltjes_moment(double e, double sigma, double c) {
  auto f = [&](double v) {
    const double u = std::pow(v, 1.0 / e);
    return std::pow(1.0 + c * u, -sigma) / e;
  };
  const QuadResult r = integrate_adaptive(f, 0.0, 1.0, 1e-13, 1e-12, 2000);
  return r.value;
}

struct KernelSeries {
  std::vector<double> exponents;
  std::vector<double> scaled_coef;  // coef_k * R^{e_k}
};

// Residue series of the representation kernel, with coefficients pre-scaled
// by R^{e_k} so that Int_0^R t^{e_k - 1} w(t/R) dt = scaled_coef * moment(e_k).
KernelSeries kernel_series(const HFunctionSpec& kernel, double R, double floor_mag,
                           long max_terms) {
  KernelSeries ks;
  const double logR = std::log(R);
  int below = 0;
  for_each_left_residue(kernel, max_terms, [&](const ResidueTerm& t) {
    double c = 0.0;
    if (t.sign != 0.0) c = t.sign * std::exp(t.log_abs + t.exponent * logR);
    ks.exponents.push_back(t.exponent);
    ks.scaled_coef.push_back(c);
    if (std::abs(c) < floor_mag && t.exponent > 1.0) {
      if (++below >= 6) return false;
    } else {
      below = 0;
    }
    return true;
  });
  return ks;
}

double accelerated_sum(const std::vector<double>& terms, double tol, bool* met) {
  double sum = 0.0;
  std::vector<double> partial;
  partial.reserve(terms.size());
  for (double t : terms) {
    sum += t;
    partial.push_back(sum);
  }
  if (partial.size() < 8) {
    if (met) *met = true;
    return sum;
  }
  const int window = std::min<int>(30, static_cast<int>(partial.size()));
  const double accel = wynn_epsilon_limit(partial.data() + partial.size() - window, window);
  const double tail_scale = std::abs(terms.back());
  if (met) *met = tail_scale <= tol * std::max(1.0, std::abs(accel)) * 50.0;
  // trust the plain sum when the tail already died out
  if (tail_scale <= tol * 1e-3 * std::max(1.0, std::abs(sum))) {
    if (met) *met = true;
    return sum;
  }
  return accel;
}

void require_representation_hypotheses(const FoxWrightSpec& fw, bool want_mu_zero) {
  const ConvergenceReport rep = classify(fw);
  double sum_a = 0.0, sum_b = 0.0;
  for (const auto& pr : fw.upper) sum_a += pr.A;
  for (const auto& pr : fw.lower) sum_b += pr.A;
  if (std::abs(sum_a - sum_b) > 1e-10)
    throw precondition_error("representation: requires sum A = sum B");
  double gamma_min = std::numeric_limits<double>::infinity();
  for (const auto& pr : fw.upper) {
    if (!(pr.A > 0.0)) throw precondition_error("representation: weights must be positive");
    gamma_min = std::min(gamma_min, pr.a / pr.A);
  }
  if (!(gamma_min >= 1.0 - 1e-12))
    throw precondition_error("representation: requires min(a_j / A_j) >= 1");
  if (want_mu_zero) {
    if (std::abs(*rep.mu) > 1e-10)
      throw precondition_error("exp_shifted_rep: requires mu = 0 (got mu = " +
                               std::to_string(*rep.mu) + ")");
  } else {
    if (!(*rep.mu > 1e-12)) {
      if (std::abs(*rep.mu) <= 1e-12)
        throw precondition_error("integral_rep_fw: mu = 0; use exp_shifted_rep");
      throw precondition_error("integral_rep_fw: requires mu > 0");
    }
  }
}

}  // namespace

// ---- Laplace -------------------------------------------------------------

HFunctionSpec laplace_of_h(const HFunctionSpec& spec) {
  const ConvergenceReport rep = convergence_params(spec);
  if (!(rep.big_d > 1e-12 || (std::abs(rep.big_d) <= 1e-12 && rep.big_c >= 0.0)))
    throw precondition_error("laplace_of_h: requires D > 0, or D = 0 with C >= 0");
  if (spec.n() >= 1 && !(min_upper_ratio(spec) + 1.0 > 0.0))
    throw precondition_error("laplace_of_h: requires min(a_j / A_j) + 1 > 0");
  std::vector<ParamPair> lo = spec.lower();
  lo.insert(lo.begin(), ParamPair{0.0, 1.0});
  return HFunctionSpec(spec.m() + 1, spec.n(), spec.upper(), std::move(lo));
}

double eval_laplace_image(const HFunctionSpec& image, double s, double tol) {
  if (!(s > 0.0)) throw spec_error("eval_laplace_image: s must be positive");
  return eval_h(image, 1.0 / s, tol).value / s;
}

double laplace_numeric(const HFunctionSpec& spec, double s, double tol) {
  if (!(s > 0.0)) throw spec_error("laplace_numeric: s must be positive");
  const ContourSpec contour = choose_contour(spec, tol * 1e-2);
  auto h = [&](double t) { return eval_h(spec, t, contour).value; };

  // integrable endpoint: H ~ t^c with c > -1 under the lemma hypotheses
  const double c = spec.n() >= 1 ? min_upper_ratio(spec) : 0.0;
  double d_exp = 0.0;
  if (spec.m() >= 1) d_exp = *convergence_params(spec).inf_exponent;

  double T = 4.0;
  while (std::exp(-s * T) * std::pow(T, std::max(d_exp, 0.0)) > tol * 1e-3 && T < 600.0)
    T *= 1.5;

  double head = 0.0;
  if (c < -0.1) {
    // flatten the t^c endpoint with t = u^kappa
    const double kappa = 2.0 / (1.0 + c);
    auto g = [&](double u) {
      const double t = std::pow(u, kappa);
      return h(t) * std::exp(-s * t) * kappa * std::pow(u, kappa - 1.0);
    };
    head = integrate_adaptive(g, 0.0, 1.0, tol * 0.2, tol * 0.1, 2000).value;
  } else {
    head = integrate_adaptive([&](double t) { return h(t) * std::exp(-s * t); }, 0.0, 1.0,
                              tol * 0.2, tol * 0.1, 2000)
               .value;
  }
  const double tail = integrate_adaptive([&](double t) { return h(t) * std::exp(-s * t); }, 1.0,
                                         T, tol * 0.2, tol * 0.1, 4000)
                          .value;
  return head + tail;
}

// ---- Hankel ----------------------------------------------------------------

double HankelImage::prefactor(double x) const {
  return std::pow(2.0, rho_p - 1.0) * std::pow(x, -rho_p);
}

double HankelImage::argument(double x) const { return b * std::pow(2.0 / x, sigma); }

HankelImage hankel_of_h(const HFunctionSpec& spec, double rho_p, double nu, double sigma,
                        double b) {
  if (!(sigma > 0.0)) throw spec_error("hankel_of_h: sigma must be positive");
  if (!(b > 0.0)) throw spec_error("hankel_of_h: b must be positive");
  const ConvergenceReport rep = convergence_params(spec);
  if (!(rep.big_d > 1e-12))
    throw precondition_error("hankel_of_h: requires D > 0 (the D = C = 0 branch is excluded)");
  if (spec.n() >= 1 && !(rho_p + nu + min_upper_ratio(spec) > -1.0))
    throw precondition_error("hankel_of_h: requires rho + nu + min(a_j / A_j) > -1");
  if (spec.m() >= 1) {
    double edge = std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.m(); ++j)
      edge = std::min(edge, (1.0 - spec.lower()[j].a) / spec.lower()[j].A);
    if (!(rho_p + edge < 1.5))
      throw precondition_error("hankel_of_h: requires rho + min((1 - b_j) / B_j) < 3/2");
  }
  std::vector<ParamPair> lo = spec.lower();
  lo.insert(lo.begin(), ParamPair{1.0 - 0.5 * (rho_p + nu), 0.5 * sigma});
  lo.push_back(ParamPair{1.0 - 0.5 * (rho_p - nu), 0.5 * sigma});
  HFunctionSpec image(spec.m() + 1, spec.n(), spec.upper(), std::move(lo));
  return {std::move(image), rho_p, sigma, b};
}

double eval_hankel_image(const HankelImage& image, double x, double tol) {
  if (!(x > 0.0)) throw spec_error("eval_hankel_image: x must be positive");
  return image.prefactor(x) * eval_h(image.spec, image.argument(x), tol).value;
}

OscillatoryResult hankel_numeric(const HFunctionSpec& spec, double rho_p, double nu, double sigma,
                                 double b, double x, double tol) {
  if (!(x > 0.0) || !(b > 0.0) || !(sigma > 0.0))
    throw spec_error("hankel_numeric: x, b, sigma must be positive");
  const ContourSpec contour = choose_contour(spec, std::min(tol * 1e-2, 1e-9));
  auto f = [&](double r) {
    if (r <= 0.0) return 0.0;
    return std::pow(r, rho_p - 1.0) * bessel_j(nu, x * r) *
           eval_h(spec, b * std::pow(r, sigma), contour).value;
  };
  auto edge = [&](int k) { return k == 0 ? 0.0 : bessel_zero_approx(nu, k) / x; };

  // endpoint exponent rho - 1 + nu + sigma * c; flatten when below 0.3
  const double c0 = spec.n() >= 1 ? min_upper_ratio(spec) : 0.0;
  const double e0 = rho_p + nu + sigma * c0;
  double head = 0.0;
  int head_cells = 0;
  double first_edge = edge(1);
  if (e0 < 1.3) {
    const double kappa = 2.0 / e0;
    auto g = [&](double u) {
      const double r = first_edge * std::pow(u, kappa);
      return f(r) * first_edge * kappa * std::pow(u, kappa - 1.0);
    };
    head = integrate_adaptive(g, 0.0, 1.0, tol * 0.05, 1e-10, 800).value;
    head_cells = 1;
  }
  auto shifted_edge = [&](int k) { return edge(k + head_cells); };
  OscillatoryResult out;
  const QuadResult tail = integrate_cells_accelerated(f, shifted_edge, tol, 200);
  if (!tail.converged && tail.error > 10.0 * tol * std::max(1.0, std::abs(tail.value)))
    throw convergence_error("hankel_numeric: no convergence after 200 oscillation cells");
  out.value = head + tail.value;
  out.error = tail.error;
  out.cells = 200;
  out.tolerance_met = tail.converged;
  return out;
}

double radial_fourier(const HFunctionSpec& spec, int d, double xi, double tol) {
  if (d < 1) throw spec_error("radial_fourier: d must be >= 1");
  if (!(xi > 0.0)) throw spec_error("radial_fourier: xi must be positive");
  const double nu = 0.5 * (d - 2);
  const double rho_p = 0.5 * d + 1.0;
  // integrability at infinity per the Hankel bound on the right family
  if (spec.m() >= 1) {
    double edge = std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.m(); ++j)
      edge = std::min(edge, (1.0 - spec.lower()[j].a) / spec.lower()[j].A);
    if (!(rho_p + edge < 1.5))
      throw precondition_error("radial_fourier: profile not integrable (rho + min((1-b)/B) >= 3/2)");
  }
  const OscillatoryResult r = hankel_numeric(spec, rho_p, nu, 1.0, 1.0, xi, tol);
  return std::pow(xi, 0.5 * (2 - d)) * r.value;
}

// ---- integral representations ---------------------------------------------

HFunctionSpec representation_kernel(const FoxWrightSpec& fw) {
  for (const auto& pr : fw.upper)
    if (!(pr.A > 0.0)) throw spec_error("representation_kernel: positive weights required");
  for (const auto& pr : fw.lower)
    if (!(pr.A > 0.0)) throw spec_error("representation_kernel: positive weights required");
  return HFunctionSpec(0, fw.p(), fw.upper, fw.lower);
}

double support_radius(const FoxWrightSpec& fw) {
  double log_r = 0.0;
  for (const auto& pr : fw.upper) log_r += pr.A * std::log(pr.A);
  for (const auto& pr : fw.lower) log_r -= pr.A * std::log(pr.A);
  return std::exp(log_r);
}

double representation_eta(const FoxWrightSpec& fw) {
  double log_eta = 0.5 * (fw.p() - fw.q()) * std::log(2.0 * kPi);
  for (const auto& pr : fw.upper) log_eta += (pr.a - 0.5) * std::log(pr.A);
  for (const auto& pr : fw.lower) log_eta += (0.5 - pr.a) * std::log(pr.A);
  return std::exp(log_eta);
}

double integral_rep_fw(const FoxWrightSpec& fw, double z, double tol) {
  require_representation_hypotheses(fw, /*want_mu_zero=*/false);
  const HFunctionSpec kernel = representation_kernel(fw);
  const double R = support_radius(fw);
  const KernelSeries ks = kernel_series(kernel, R, tol * 1e-6, 40000);
  std::vector<double> terms(ks.exponents.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    terms[k] = ks.scaled_coef[k] * exp_moment(ks.exponents[k], z * R);
  }
  bool met = false;
  const double value = accelerated_sum(terms, tol, &met);
  if (!met) throw convergence_error("integral_rep_fw: kernel series did not stabilize");
  return value;
}

double stieltjes_rep(const FoxWrightSpec& fw, double sigma, double z, double tol) {
  if (sigma < 0.0) throw spec_error("stieltjes_rep: sigma must be >= 0");
  require_representation_hypotheses(fw, /*want_mu_zero=*/false);
  const HFunctionSpec kernel = representation_kernel(fw);
  const double R = support_radius(fw);
  // kernel must not dip below -1e-8 on a 200-point log grid over (0, R)
  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double t = R * std::exp(-12.0 + 11.9 * i / 199.0);
      const double v = eval_h_series(kernel, t, 1e-10).value;
      worst = std::min(worst, v);
    }
    if (worst < -1e-8)
      throw precondition_error("stieltjes_rep: kernel dips below -1e-8 (min = " +
                               std::to_string(worst) + ")");
  }
  const KernelSeries ks = kernel_series(kernel, R, tol * 1e-6, 40000);
  std::vector<double> terms(ks.exponents.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    terms[k] = ks.scaled_coef[k] * stieltjes_moment(ks.exponents[k], sigma, z * R);
  }
  bool met = false;
  const double value = accelerated_sum(terms, tol, &met);
  if (!met) throw convergence_error("stieltjes_rep: kernel series did not stabilize");
  return value;
}

ExpShiftedRep exp_shifted_rep(const FoxWrightSpec& fw, double z, double tol) {
  require_representation_hypotheses(fw, /*want_mu_zero=*/true);
  const HFunctionSpec kernel = representation_kernel(fw);
  const double R = support_radius(fw);
  const KernelSeries ks = kernel_series(kernel, R, tol * 1e-6, 60000);
  std::vector<double> terms(ks.exponents.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    terms[k] = ks.scaled_coef[k] * exp_moment(ks.exponents[k], -z * R);
  }
  bool met = false;
  const double value = accelerated_sum(terms, tol, &met);
  if (!met) throw convergence_error("exp_shifted_rep: kernel series did not stabilize");
  ExpShiftedRep rep;
  rep.value = value;
  rep.constants.eta = representation_eta(fw);
  rep.constants.rho = R;
  return rep;
}

// ---- shift constants -------------------------------------------------------

double eta1_constant(double tau, double d) {
  return std::sqrt(kPi) * std::pow(2.0, tau - 0.5 * d + 0.5);
}

double eta2_constant(double alpha, double gamma, double d) {
  const double one_m = 1.0 - alpha;
  return std::sqrt(2.0 * kPi) * std::pow(0.5, 0.5 * d - 1.5) *
         std::pow(one_m / (2.0 * alpha), (2.0 + 2.0 * gamma * one_m - alpha) / (2.0 * alpha)) *
         std::pow(1.0 / (2.0 * alpha), gamma * (alpha - 1.0) - 0.5);
}

double rho2_constant(double alpha) {
  const double one_m = 1.0 - alpha;
  return std::sqrt(2.0) * std::pow(1.0 / (2.0 * alpha), 1.0 / (2.0 * alpha)) *
         std::pow(one_m / (2.0 * alpha), (alpha - 1.0) / (2.0 * alpha));
}

double eta3_constant(double alpha, double beta, double gamma) {
  return std::sqrt(2.0) * std::pow(1.0 / (2.0 * alpha), -0.5 - gamma / beta) *
         std::pow(1.0 / (2.0 * alpha * beta), (gamma + beta) / (alpha * beta) - 0.5);
}

double rho3_constant(double alpha, double beta) {
  return std::sqrt(0.5) * std::pow(1.0 / (2.0 * alpha), 1.0 / (2.0 * alpha)) *
         std::pow(1.0 / (2.0 * alpha * beta), 1.0 / (2.0 * alpha * beta));
}

RepresentationConstants hypothesis_constants(const std::string& theorem_id,
                                             const std::map<std::string, double>& params) {
  auto get = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end())
      throw spec_error(std::string("hypothesis_constants: missing parameter ") + name);
    return it->second;
  };
  if (theorem_id == "H8" || theorem_id == "eta1") {
    const double tau = get("tau");
    const double d = get("d");
    if (!(tau > 0.0 && tau < 1.0))
      throw precondition_error("H8: requires tau in (0, 1)");
    if (!(d - tau >= 1.0)) throw precondition_error("H8: requires d - tau >= 1");
    RepresentationConstants c;
    c.eta = eta1_constant(tau, d);
    c.rho = 2.0;  // shift exponent of the printed statement
    c.eta_variant = c.eta;
    return c;
  }
  if (theorem_id == "H9" || theorem_id == "eta2") {
    const double alpha = get("alpha");
    const double d = get("d");
    const double golden = 0.5 * (3.0 - std::sqrt(5.0));
    if (!(alpha >= golden && alpha < 1.0))
      throw precondition_error("H9: requires alpha in [(3 - sqrt 5)/2, 1)");
    if (!(d - 2.0 >= 1.0)) throw precondition_error("H9: requires d - 2 >= 1");
    // solve the printed equality (1 + gamma (1-alpha)^2)/alpha + d/2 = 5/2 for gamma
    const double gamma = (alpha * (5.0 - d) * 0.5 - 1.0) / ((1.0 - alpha) * (1.0 - alpha));
    if (!(2.0 * (gamma + 1.0 / (1.0 - alpha)) >= 1.0))
      throw precondition_error("H9: solved gamma violates 2 (gamma + 1/(1 - alpha)) >= 1");
    RepresentationConstants c;
    c.eta = eta2_constant(alpha, gamma, d);
    c.rho = rho2_constant(alpha);
    c.eta_variant = c.eta;
    c.rho_variant = c.rho;
    return c;
  }
  if (theorem_id == "H10" || theorem_id == "eta3") {
    const double alpha = get("alpha");
    if (!(alpha > 0.0 && alpha < 1.0))
      throw precondition_error("H10: requires alpha in (0, 1) for the solved chain");
    // the equality chain forces beta = 1/(1 - alpha) and gamma = -beta
    const double beta = 1.0 / (1.0 - alpha);
    const double gamma = -beta;
    if (!(2.0 * (gamma + beta) >= 1.0))
      throw precondition_error("H10: solved parameters violate 2 (gamma + beta) >= 1");
    RepresentationConstants c;
    c.eta = eta3_constant(alpha, beta, gamma);
    c.rho = rho3_constant(alpha, beta);
    c.eta_variant = c.eta;
    c.rho_variant = c.rho;
    return c;
  }
  throw spec_error("hypothesis_constants: unknown theorem id " + theorem_id);
}

}  // namespace foxh
