#include "foxh/fox_wright.hpp"

#include <cmath>
#include <limits>

namespace foxh {

namespace {

constexpr long kTermCap = 100000;

struct TermAccumulator {
  double sum = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  int small_streak = 0;
  int growth_streak = 0;
  long terms = 0;
  double last_mag = 0.0;

  // returns true when the truncation rule fired
  bool push(double term, double tol) {
    ++terms;
    sum += term;
    const double mag = std::abs(term);
    last_mag = mag;
    if (mag > prev_mag) {
      if (++growth_streak >= 20)
        throw convergence_error("series: terms grow for 20 consecutive indices");
    } else {
      growth_streak = 0;
    }
    prev_mag = mag;
    if (mag <= tol * std::max(std::abs(sum), 1e-12)) {
      if (++small_streak >= 3) return true;
    } else {
      small_streak = 0;
    }
    return false;
  }
};

}  // namespace

FwEvalResult eval_fw(const FoxWrightSpec& fw, double z, double tol) {
  if (!(tol > 0.0)) throw spec_error("eval_fw: tol must be positive");
  const ConvergenceReport rep = classify(fw);
  if (*rep.delta < -1e-12)
    throw convergence_error("eval_fw: series diverges (delta < 0)");
  if (std::abs(*rep.delta) <= 1e-12 && std::abs(z) >= *rep.radius * (1.0 - 1e-12))
    throw convergence_error("eval_fw: |z| outside the boundary-case radius");

  const double log_abs_z = (z == 0.0) ? 0.0 : std::log(std::abs(z));
  TermAccumulator acc;
  for (long k = 0; k < kTermCap; ++k) {
    double log_abs = -std::lgamma(static_cast<double>(k) + 1.0);
    double sign = 1.0;
    bool zero = false;
    for (const auto& pr : fw.upper) {
      const SignedLog sl = signed_log_gamma(pr.a + k * pr.A);
      if (!sl.finite())
        throw pole_error("eval_fw: upper parameter hits a Gamma pole at term " + std::to_string(k));
      log_abs += sl.log_abs;
      sign *= sl.sign;
    }
    for (const auto& pr : fw.lower) {
      const SignedLog sl = signed_log_gamma(pr.a + k * pr.A);
      if (!sl.finite()) {
        zero = true;  // 1/Gamma(pole) = 0
        break;
      }
      log_abs -= sl.log_abs;
      sign *= sl.sign;
    }
    double term = 0.0;
    if (!zero) {
      if (z == 0.0) {
        term = (k == 0) ? sign * std::exp(log_abs) : 0.0;
      } else {
        if (z < 0.0 && (k % 2 != 0)) sign = -sign;
        term = sign * std::exp(log_abs + k * log_abs_z);
      }
    }
    if (acc.push(term, tol) || (z == 0.0 && k >= 2)) {
      return {acc.sum, acc.last_mag, acc.terms};
    }
  }
  throw convergence_error("eval_fw: truncation cap of 1e5 terms reached");
}

FwEvalResult mittag_leffler(double alpha, double beta, double gamma_p, double z, double tol) {
  if (!(alpha > 0.0)) throw spec_error("mittag_leffler: alpha must be positive");
  if (!(tol > 0.0)) throw spec_error("mittag_leffler: tol must be positive");

  // (gamma)_k tracked incrementally in log/sign form
  double log_poch = 0.0;
  double sign_poch = 1.0;
  const double log_abs_z = (z == 0.0) ? 0.0 : std::log(std::abs(z));
  TermAccumulator acc;
  for (long k = 0; k < kTermCap; ++k) {
    double term = 0.0;
    const SignedLog sl = signed_log_gamma(beta + k * alpha);
    if (sl.finite() && sign_poch != 0.0) {
      double sign = sign_poch * sl.sign;
      if (z < 0.0 && (k % 2 != 0)) sign = -sign;
      if (z != 0.0 || k == 0)
        term = sign * std::exp(log_poch - sl.log_abs -
                               std::lgamma(static_cast<double>(k) + 1.0) + k * log_abs_z);
    }
    const bool stop = acc.push(term, tol) || (z == 0.0 && k >= 2);
    if (stop) return {acc.sum, acc.last_mag, acc.terms};
    const double factor = gamma_p + static_cast<double>(k);
    if (factor == 0.0) {
      sign_poch = 0.0;  // rising product crossed zero; all later terms vanish
    } else if (sign_poch != 0.0) {
      log_poch += std::log(std::abs(factor));
      if (factor < 0.0) sign_poch = -sign_poch;
    }
  }
  throw convergence_error("mittag_leffler: truncation cap of 1e5 terms reached");
}

PfqReduction to_generalized_hypergeometric(const FoxWrightSpec& fw) {
  for (const auto& pr : fw.upper)
    if (std::abs(pr.A - 1.0) > 1e-12)
      throw precondition_error("to_generalized_hypergeometric: all weights must equal 1");
  for (const auto& pr : fw.lower)
    if (std::abs(pr.A - 1.0) > 1e-12)
      throw precondition_error("to_generalized_hypergeometric: all weights must equal 1");
  double log_abs = 0.0;
  double sign = 1.0;
  for (const auto& pr : fw.upper) {
    const SignedLog sl = signed_log_gamma(pr.a);
    if (!sl.finite())
      throw pole_error("to_generalized_hypergeometric: Gamma pole in the coefficient");
    log_abs += sl.log_abs;
    sign *= sl.sign;
  }
  for (const auto& pr : fw.lower) {
    const SignedLog sl = signed_log_gamma(pr.a);
    if (!sl.finite())
      throw pole_error("to_generalized_hypergeometric: Gamma pole in the coefficient");
    log_abs -= sl.log_abs;
    sign *= sl.sign;
  }
  PfqReduction red;
  red.coefficient = sign * std::exp(log_abs);
  for (const auto& pr : fw.upper) red.upper.push_back(pr.a);
  for (const auto& pr : fw.lower) red.lower.push_back(pr.a);
  return red;
}

ConvergenceReport classify(const FoxWrightSpec& fw) { return convergence_params(fw); }

}  // namespace foxh
