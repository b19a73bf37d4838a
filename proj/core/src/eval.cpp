#include "foxh/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace foxh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

// 16-point Gauss-Legendre on [-1, 1], positive half.
constexpr double kGLx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                            0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                            0.9445750230732326, 0.9894009349916499};
constexpr double kGLw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                            0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                            0.0622535239386479, 0.0271524594117541};

cplx contour_integrand(const HFunctionSpec& spec, double abscissa, double t, double log_z) {
  const cplx s(abscissa, t);
  const cplx lk = log_mellin_kernel(spec, s) - s * log_z;
  if (lk.real() > 709.0) throw overflow_error("eval_h: integrand overflows double range");
  return std::exp(lk);
}

cplx integrate_contour(const HFunctionSpec& spec, double abscissa, double T, double log_z,
                       int panels, long& evals) {
  const double width = 2.0 * T / panels;
  cplx acc(0.0, 0.0);
  for (int pnl = 0; pnl < panels; ++pnl) {
    const double a = -T + pnl * width;
    const double c = a + 0.5 * width;
    const double h = 0.5 * width;
    cplx panel(0.0, 0.0);
    for (int i = 0; i < 8; ++i) {
      panel += kGLw[i] * (contour_integrand(spec, abscissa, c + h * kGLx[i], log_z) +
                          contour_integrand(spec, abscissa, c - h * kGLx[i], log_z));
      evals += 2;
    }
    acc += panel * h;
  }
  return acc;
}

struct LatticeCursor {
  double exponent;  // (a_j + l) / A_j
  int factor;
  long l;
  bool operator>(const LatticeCursor& o) const { return exponent > o.exponent; }
};

}  // namespace

ContourSpec choose_contour(const HFunctionSpec& spec, double tol) {
  if (!(tol > 0.0)) throw spec_error("choose_contour: tol must be positive");
  const auto L = left_pole_max(spec);
  const auto R = right_pole_min(spec);
  double lo, hi;
  if (L && R) {
    if (*R - *L < 1e-9)
      throw precondition_error("choose_contour: pole lattices interlace, no separating line");
    lo = *L;
    hi = *R;
  } else if (L) {
    lo = *L;
    hi = *L + 1.0;  // any line right of the left lattice works; stay close
  } else {
    hi = *R;
    lo = *R - 1.0;
  }
  const double abscissa = 0.5 * (lo + hi);

  const ConvergenceReport rep = convergence_params(spec);
  if (rep.big_d <= 1e-12)
    throw convergence_error("choose_contour: kernel does not decay along the line (D <= 0)");

  // grow T until the integrand magnitude is below tol/100 scaled by the
  // remaining exponential tail mass 2/(pi D)
  const double log_target =
      std::log(tol) + std::log(1e-2) + std::log(kPi * rep.big_d / 2.0 + 1e-30);
  double T = 6.0;
  while (T < 400.0) {
    const double mag = log_mellin_kernel(spec, cplx(abscissa, T)).real();
    if (mag <= log_target) break;
    T *= 1.25;
  }
  const int panels = std::max(4, static_cast<int>(std::ceil(2.0 * T / 1.5)));
  ContourSpec contour{abscissa, T, std::max(32, panels * 16), tol};
  return contour;
}

HEvalResult eval_h(const HFunctionSpec& spec, double z, const ContourSpec& contour) {
  if (!(z > 0.0)) throw spec_error("eval_h: z must be positive");
  if (contour.nodes < 32) throw spec_error("eval_h: contour must carry >= 32 nodes");
  {
    const auto L = left_pole_max(spec);
    const auto R = right_pole_min(spec);
    if ((L && contour.abscissa <= *L) || (R && contour.abscissa >= *R))
      throw precondition_error("eval_h: contour abscissa does not separate the pole lattices");
    const ConvergenceReport rep = convergence_params(spec);
    if (rep.big_d <= 1e-12)
      throw convergence_error("eval_h: integrand does not decay along the line (D <= 0)");
  }

  const double log_z = std::log(z);
  const double T = contour.half_height;
  int panels = std::max(contour.nodes / 16, 4);
  // resolve the z^{-it} oscillation: keep panel width below ~6pi/|ln z|
  const double osc_width = 6.0 * kPi / (std::abs(log_z) + 1.0);
  panels = std::max(panels, static_cast<int>(std::ceil(2.0 * T / std::min(1.5, osc_width))));

  HEvalResult out;
  cplx prev(0.0, 0.0);
  bool have_prev = false;
  double diff = std::numeric_limits<double>::infinity();
  for (int level = 0; level < 8; ++level) {
    const cplx integral = integrate_contour(spec, contour.abscissa, T, log_z, panels, out.nodes);
    const cplx value = integral / kTwoPi;
    if (have_prev) {
      diff = std::abs(value - prev);
      if (diff <= 0.5 * contour.tol * std::max(1.0, std::abs(value))) {
        prev = value;
        out.tolerance_met = true;
        break;
      }
    }
    prev = value;
    have_prev = true;
    if (static_cast<long>(panels) * 32L > 4000000L) break;
    panels *= 2;
  }

  const double tail = std::abs(contour_integrand(spec, contour.abscissa, T, log_z)) /
                      (kPi * std::max(convergence_params(spec).big_d, 1e-12));
  out.value = prev.real();
  out.imag_residual = std::abs(prev.imag());
  out.error = (std::isfinite(diff) ? diff : 0.0) + tail;
  return out;
}

HEvalResult eval_h(const HFunctionSpec& spec, double z, double tol) {
  return eval_h(spec, z, choose_contour(spec, tol));
}

void for_each_left_residue(const HFunctionSpec& spec, long max_terms,
                           const std::function<bool(const ResidueTerm&)>& sink) {
  if (spec.n() < 1)
    throw precondition_error("residue series: empty left pole family (n = 0)");
  std::priority_queue<LatticeCursor, std::vector<LatticeCursor>, std::greater<LatticeCursor>> heap;
  for (int j = 0; j < spec.n(); ++j) {
    heap.push({spec.upper()[j].a / spec.upper()[j].A, j, 0});
  }
  const auto& up = spec.upper();
  const auto& lo = spec.lower();
  for (long count = 0; count < max_terms && !heap.empty(); ++count) {
    const LatticeCursor cur = heap.top();
    heap.pop();
    if (!heap.empty() && std::abs(heap.top().exponent - cur.exponent) < 1e-10) {
      throw pole_error("residue series: coinciding left lattice points (higher-order pole)",
                       cur.factor, cur.l);
    }
    const double s0 = -cur.exponent;
    double log_abs = -std::lgamma(static_cast<double>(cur.l) + 1.0) - std::log(up[cur.factor].A);
    double sign = (cur.l % 2 == 0) ? 1.0 : -1.0;
    bool zero = false;
    for (int j = 0; j < spec.p() && sign != 0.0; ++j) {
      if (j == cur.factor) continue;
      const double arg = up[j].A * s0 + up[j].a;
      if (j < spec.n()) {
        const SignedLog sl = signed_log_gamma(arg);
        if (!sl.finite())
          throw pole_error("residue series: second numerator factor singular at shared point",
                           j, cur.l);
        log_abs += sl.log_abs;
        sign *= sl.sign;
      } else {
        const SignedLog sl = signed_log_gamma(1.0 - arg);
        if (!sl.finite()) {
          zero = true;  // denominator pole, residue vanishes
          break;
        }
        log_abs -= sl.log_abs;
        sign *= sl.sign;
      }
    }
    for (int j = 0; j < spec.q() && !zero && sign != 0.0; ++j) {
      const double arg = lo[j].A * s0 + lo[j].a;
      if (j < spec.m()) {
        const SignedLog sl = signed_log_gamma(1.0 - arg);
        if (!sl.finite())
          throw pole_error("residue series: right-family factor singular on the left lattice", j,
                           cur.l);
        log_abs += sl.log_abs;
        sign *= sl.sign;
      } else {
        const SignedLog sl = signed_log_gamma(arg);
        if (!sl.finite()) {
          zero = true;
          break;
        }
        log_abs -= sl.log_abs;
        sign *= sl.sign;
      }
    }
    ResidueTerm term{cur.exponent, zero ? -std::numeric_limits<double>::infinity() : log_abs,
                     zero ? 0.0 : sign};
    if (!sink(term)) return;
    LatticeCursor next = cur;
    next.l += 1;
    next.exponent += 1.0 / up[cur.factor].A;
    heap.push(next);
  }
}

SeriesResult eval_h_series(const HFunctionSpec& spec, double z, double tol) {
  if (!(tol > 0.0)) throw spec_error("eval_h_series: tol must be positive");
  const ConvergenceReport rep = convergence_params(spec);
  if (rep.big_c < -1e-12)
    throw convergence_error("eval_h_series: left residue series diverges (C < 0)");
  if (std::abs(rep.big_c) <= 1e-12 && std::abs(z) >= series_boundary(spec) * (1.0 - 1e-12))
    throw convergence_error("eval_h_series: argument outside the series radius (C = 0 boundary)");
  if (rep.delta && *rep.delta < -1e-12)
    throw convergence_error("eval_h_series: Fox-Wright preimage diverges (delta < 0)");

  if (z < 0.0) {
    for (int j = 0; j < spec.n(); ++j) {
      const double ratio = spec.upper()[j].a / spec.upper()[j].A;
      const double step = 1.0 / spec.upper()[j].A;
      if (std::abs(ratio - std::round(ratio)) > 1e-9 || std::abs(step - std::round(step)) > 1e-9)
        throw spec_error("eval_h_series: negative argument needs integer exponents");
    }
  }

  SeriesResult out;
  const double log_abs_z = (z == 0.0) ? 0.0 : std::log(std::abs(z));
  double sum = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  int small_streak = 0;
  int growth_streak = 0;
  long terms = 0;
  bool done = false;
  double last_mag = 0.0;
  for_each_left_residue(spec, 100000, [&](const ResidueTerm& t) {
    ++terms;
    if (z == 0.0) {
      if (t.exponent > 1e-12) {
        done = true;
        return false;
      }
      if (t.sign != 0.0) sum += t.sign * std::exp(t.log_abs);
      return true;
    }
    double term = 0.0;
    if (t.sign != 0.0) {
      double s = t.sign;
      if (z < 0.0 && (std::llround(t.exponent) % 2LL != 0)) s = -s;
      term = s * std::exp(t.log_abs + t.exponent * log_abs_z);
    }
    sum += term;
    const double mag = std::abs(term);
    last_mag = mag;
    if (mag > prev_mag) {
      if (++growth_streak >= 20) {
        throw convergence_error("eval_h_series: terms grow for 20 consecutive indices");
      }
    } else {
      growth_streak = 0;
    }
    prev_mag = mag;
    if (mag <= tol * std::max(std::abs(sum), 1e-12)) {
      if (++small_streak >= 3) {
        done = true;
        return false;
      }
    } else {
      small_streak = 0;
    }
    return true;
  });
  if (!done && z != 0.0)
    throw convergence_error("eval_h_series: truncation cap reached without convergence");
  out.value = sum;
  out.terms = terms;
  out.error = last_mag;
  out.tolerance_met = true;
  return out;
}

double asymptotic_exponent(const HFunctionSpec& spec, Regime regime) {
  const ConvergenceReport rep = convergence_params(spec);
  if (regime == Regime::Zero) {
    if (spec.n() < 1)
      throw precondition_error("asymptotic_exponent: empty minimum (n = 0 upper family)");
    if (!(rep.big_c >= 0.0 || rep.big_d > 0.0))
      throw precondition_error("asymptotic_exponent: requires C >= 0, or C < 0 with D > 0");
    return *rep.zero_exponent;
  }
  if (spec.m() < 1)
    throw precondition_error("asymptotic_exponent: empty minimum (m = 0 lower family)");
  if (!(rep.big_c <= 0.0 || rep.big_d > 0.0))
    throw precondition_error("asymptotic_exponent: requires C <= 0, or C > 0 with D > 0");
  return *rep.inf_exponent;
}

}  // namespace foxh
