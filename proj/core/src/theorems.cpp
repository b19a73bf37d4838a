#include "foxh/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "foxh/eval.hpp"
#include "foxh/fox_wright.hpp"
#include "foxh/quadrature.hpp"
#include "foxh/transforms.hpp"

namespace foxh {

namespace {

constexpr double kGolden = 0.381966011250105;  // (3 - sqrt 5) / 2

double get(const ParamMap& p, const char* name) {
  auto it = p.find(name);
  if (it == p.end()) throw spec_error(std::string("theorem sample: missing parameter ") + name);
  return it->second;
}

bool has(const ParamMap& p, const char* name) { return p.find(name) != p.end(); }

// ---- sampled function builders -----------------------------------------

FoxWrightSpec h8_fw(double tau, double d) {
  return FoxWrightSpec({{0.5 * d - 0.5 * tau, 0.5}, {1.0 - 0.5 * tau, 0.5}},
                       {{0.5 * d + 0.5 - tau, 1.0}});
}

FoxWrightSpec h4_fw(double tau, double d, double beta, double sigma, double delta) {
  // delta = 0 gives the denominator of the ratio
  return FoxWrightSpec({{sigma + delta, 1.0},
                        {0.5 * d - 0.5 * tau + 0.5 * delta, 0.5},
                        {1.0 - 0.5 * tau + 0.5 * delta, 0.5}},
                       {{beta - tau + delta, 1.0}});
}

FoxWrightSpec kummer_fw(double b, double c, double tau) {
  return FoxWrightSpec({{b, tau}}, {{c, tau}});
}

// ---- suite plumbing ------------------------------------------------------

struct Suite {
  HypothesisSet hypotheses;
  std::string description;
  std::function<PropertyReport(const ParamMap&, const SuiteConfig&)> run_sample;
};

using SuiteTable = std::vector<std::pair<std::string, Suite>>;

PropertyReport nonneg_on_log_grid(const HFunctionSpec& spec, const SuiteConfig& cfg) {
  const ContourSpec contour = choose_contour(spec, cfg.eval_tol);
  auto f = [&](double x) { return eval_h(spec, x, contour).value; };
  return check_nonnegativity(f, GridSpec{0.05, 10.0, cfg.grid_count, GridSpacing::Log}, cfg.eps);
}

PropertyReport ratio_decreasing(const std::function<double(double)>& num,
                                const std::function<double(double)>& den,
                                const SuiteConfig& cfg, double lo = 0.02, double hi = 0.95) {
  return check_ratio_monotone(num, den, GridSpec{lo, hi, std::min(cfg.grid_count, 60)},
                              Direction::Decreasing, cfg.eps);
}

// ---- individual suites -----------------------------------------------

Suite make_h1() {
  Suite s;
  s.description =
      "non-negativity of the H_{3,2}^{1,2} radial Fourier image family on a log grid";
  s.hypotheses.id = "H1";
  s.hypotheses.constraints = {
      {"0 < tau <= 2", [](const ParamMap& p) { return get(p, "tau") > 0 && get(p, "tau") <= 2; }},
      {"alpha in (0,1)",
       [](const ParamMap& p) { return get(p, "alpha") > 0 && get(p, "alpha") < 1; }},
      {"beta in (0,1)", [](const ParamMap& p) { return get(p, "beta") > 0 && get(p, "beta") < 1; }},
      {"gamma > 0", [](const ParamMap& p) { return get(p, "gamma") > 0; }},
      {"beta >= alpha * gamma",
       [](const ParamMap& p) { return get(p, "beta") >= get(p, "alpha") * get(p, "gamma"); }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["alpha"] = rng.uniform(0.2, 0.9);
    double gamma = rng.uniform(0.1, 1.6);
    while (p["alpha"] * gamma >= 0.9) gamma *= 0.7;
    p["gamma"] = gamma;
    p["beta"] = rng.uniform(p["alpha"] * gamma, 0.97);
    p["tau"] = rng.uniform(0.3, 2.0);
    p["d"] = rng.uniform_int(1, 3);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const HFunctionSpec spec = h1_target_spec(get(p, "tau"), get(p, "alpha"), get(p, "beta"),
                                              get(p, "gamma"), get(p, "d"));
    return nonneg_on_log_grid(spec, cfg);
  };
  return s;
}

Suite make_h2() {
  Suite s;
  s.description =
      "non-negativity of the second H_{3,2}^{1,2} radial Fourier image family on a log grid";
  s.hypotheses.id = "H2";
  s.hypotheses.constraints = {
      {"tau in (0,2]", [](const ParamMap& p) { return get(p, "tau") > 0 && get(p, "tau") <= 2; }},
      {"alpha in (0,1]",
       [](const ParamMap& p) { return get(p, "alpha") > 0 && get(p, "alpha") <= 1; }},
      {"beta > 1/alpha - 1",
       [](const ParamMap& p) { return get(p, "beta") > 1.0 / get(p, "alpha") - 1.0; }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    const double alpha = rng.uniform(0.5, 0.95);
    // keep the contour decay rate D = 1/(alpha beta) + 1 - 1/alpha above 1/4
    const double lo = 1.0 / alpha - 1.0;
    const double hi = 1.0 / (1.0 - 0.75 * alpha);
    p["alpha"] = alpha;
    p["beta"] = lo + (hi - lo) * rng.uniform(0.1, 0.9);
    p["gamma"] = rng.uniform(-0.5, 1.0);
    p["tau"] = rng.uniform(0.3, 2.0);
    p["d"] = rng.uniform_int(1, 3);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const HFunctionSpec spec = h2_target_spec(get(p, "tau"), get(p, "alpha"), get(p, "beta"),
                                              get(p, "gamma"), get(p, "d"));
    return nonneg_on_log_grid(spec, cfg);
  };
  return s;
}

Suite make_h3() {
  Suite s;
  s.description = "ratio of shifted/unshifted 3Psi2 values decreasing on (0, 1)";
  s.hypotheses.id = "H3";
  s.hypotheses.constraints = {
      {"0 < a1 <= a2",
       [](const ParamMap& p) { return get(p, "a1") > 0 && get(p, "a1") <= get(p, "a2"); }},
      {"0 < b1 <= b2",
       [](const ParamMap& p) { return get(p, "b1") > 0 && get(p, "b1") <= get(p, "b2"); }},
      {"b1 - a1 >= 0", [](const ParamMap& p) { return get(p, "b1") >= get(p, "a1"); }},
      {"b1 + b2 - a1 - a2 >= 0",
       [](const ParamMap& p) {
         return get(p, "b1") + get(p, "b2") >= get(p, "a1") + get(p, "a2");
       }},
      {"A > 0", [](const ParamMap& p) { return get(p, "A") > 0; }},
      {"sigma > 0", [](const ParamMap& p) { return get(p, "sigma") > 0; }},
      {"delta > 0", [](const ParamMap& p) { return get(p, "delta") > 0; }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["A"] = rng.uniform(0.6, 1.4);
    p["a1"] = rng.uniform(0.4, 1.2);
    p["a2"] = p["a1"] + rng.uniform(0.1, 1.0);
    p["b1"] = p["a1"] + rng.uniform(0.05, 0.6);
    p["b2"] = std::max(p["b1"], p["a2"]) + rng.uniform(0.05, 0.6);
    p["sigma"] = rng.uniform(0.5, 2.0);
    p["delta"] = rng.uniform(0.3, 1.2);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const double A = get(p, "A"), dl = get(p, "delta"), sg = get(p, "sigma");
    const FoxWrightSpec shifted({{sg, 1.0}, {get(p, "a1") + dl * A, A}, {get(p, "a2") + dl * A, A}},
                                {{get(p, "b1") + dl * A, A}, {get(p, "b2") + dl * A, A}});
    const FoxWrightSpec base({{sg, 1.0}, {get(p, "a1"), A}, {get(p, "a2"), A}},
                             {{get(p, "b1"), A}, {get(p, "b2"), A}});
    auto num = [&](double z) { return eval_fw(shifted, -z, cfg.eval_tol).value; };
    auto den = [&](double z) { return eval_fw(base, -z, cfg.eval_tol).value; };
    return ratio_decreasing(num, den, cfg);
  };
  return s;
}

Suite make_h4() {
  Suite s;
  s.description =
      "3Psi1 ratio decreasing on (0,1) and logarithmic complete monotonicity of the base value";
  s.hypotheses.id = "H4";
  s.hypotheses.constraints = {
      {"tau in (0,1)", [](const ParamMap& p) { return get(p, "tau") > 0 && get(p, "tau") < 1; }},
      {"d - tau >= 1", [](const ParamMap& p) { return get(p, "d") - get(p, "tau") >= 1; }},
      {"beta > d/2 + 1/2",
       [](const ParamMap& p) { return get(p, "beta") > 0.5 * get(p, "d") + 0.5; }},
      {"sigma > 0", [](const ParamMap& p) { return get(p, "sigma") > 0; }},
      {"delta > 0", [](const ParamMap& p) { return get(p, "delta") > 0; }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["tau"] = rng.uniform(0.15, 0.85);
    p["d"] = rng.uniform_int(2, 3);
    p["beta"] = 0.5 * p["d"] + 0.5 + rng.uniform(0.1, 1.6);
    p["sigma"] = rng.uniform(0.5, 2.0);
    p["delta"] = rng.uniform(0.3, 1.2);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const double tau = get(p, "tau"), d = get(p, "d"), beta = get(p, "beta");
    const double sg = get(p, "sigma"), dl = get(p, "delta");
    const FoxWrightSpec shifted = h4_fw(tau, d, beta, sg, dl);
    const FoxWrightSpec base = h4_fw(tau, d, beta, sg, 0.0);
    auto num = [&](double z) { return eval_fw(shifted, -z, cfg.eval_tol).value; };
    auto den = [&](double z) { return eval_fw(base, -z, cfg.eval_tol).value; };
    PropertyReport rep = ratio_decreasing(num, den, cfg);
    PropertyReport logcm = check_log_cm(
        den, GridSpec{0.03, 0.95, std::min(cfg.grid_count, 40)}, cfg.max_order, cfg.eps);
    rep.merge(logcm);
    return rep;
  };
  return s;
}

Suite make_infeasible(const std::string& id, std::vector<Constraint> constraints,
                      const std::string& why) {
  Suite s;
  s.description = "hypothesis set admits no parameters: " + why;
  s.hypotheses.id = id;
  s.hypotheses.constraints = std::move(constraints);
  const std::string message = "hypothesis set " + id + " is empty: " + why;
  s.hypotheses.sampler = [message](std::uint64_t) -> ParamMap {
    throw infeasible_error(message);
  };
  s.run_sample = [message](const ParamMap&, const SuiteConfig&) -> PropertyReport {
    throw infeasible_error(message);
  };
  return s;
}

Suite make_h5() {
  return make_infeasible(
      "H5",
      {{"alpha in [(3-sqrt5)/2, 1)",
        [](const ParamMap& p) { return get(p, "alpha") >= kGolden && get(p, "alpha") < 1; }},
       {"min(d-2, 2(gamma + 1/(1-alpha))) >= 1",
        [](const ParamMap& p) {
          const double a = get(p, "alpha");
          return std::min(get(p, "d") - 2.0, 2.0 * (get(p, "gamma") + 1.0 / (1.0 - a))) >= 1.0;
        }},
       {"(1 + gamma (1-alpha)^2)/alpha + d/2 < 5/2",
        [](const ParamMap& p) {
          const double a = get(p, "alpha");
          return (1.0 + get(p, "gamma") * (1.0 - a) * (1.0 - a)) / a + 0.5 * get(p, "d") < 2.5;
        }}},
      "with gamma >= 1/2 - 1/(1-alpha) the third constraint's left side is at least "
      "(1+alpha^2)/(2 alpha) >= 1, while d >= 3 caps it below 1");
}

Suite make_h6() {
  return make_infeasible(
      "H6",
      {{"tau in (0,2]", [](const ParamMap& p) { return get(p, "tau") > 0 && get(p, "tau") <= 2; }},
       {"1/tau = 1/2 + 1/(2 beta)",
        [](const ParamMap& p) {
          return std::abs(1.0 / get(p, "tau") - 0.5 - 0.5 / get(p, "beta")) < 1e-9;
        }},
       {"min(2 beta - beta tau, d - tau) >= 1",
        [](const ParamMap& p) {
          const double b = get(p, "beta"), t = get(p, "tau");
          return std::min(b * (2.0 - t), get(p, "d") - t) >= 1.0;
        }},
       {"tau > d/2 + 1/2",
        [](const ParamMap& p) { return get(p, "tau") > 0.5 * get(p, "d") + 0.5; }}},
      "the equality forces beta (2 - tau) = tau, so the min-constraint gives tau >= 1 and "
      "d >= 1 + tau, which contradicts tau > d/2 + 1/2 for tau <= 2");
}

Suite make_h7() {
  return make_infeasible(
      "H7",
      {{"alpha in (0,1]",
        [](const ParamMap& p) { return get(p, "alpha") > 0 && get(p, "alpha") <= 1; }},
       {"1/alpha = 1 + 1/(alpha beta)",
        [](const ParamMap& p) {
          return std::abs(1.0 / get(p, "alpha") - 1.0 -
                          1.0 / (get(p, "alpha") * get(p, "beta"))) < 1e-9;
        }},
       {"1 + 1/(alpha beta) > 1/alpha",
        [](const ParamMap& p) {
          return 1.0 + 1.0 / (get(p, "alpha") * get(p, "beta")) > 1.0 / get(p, "alpha");
        }},
       {"2 (gamma + beta) >= 1",
        [](const ParamMap& p) { return 2.0 * (get(p, "gamma") + get(p, "beta")) >= 1.0; }}},
      "the second and third lines require 1 + 1/(alpha beta) to equal and to exceed 1/alpha "
      "at the same time");
}

Suite make_h8() {
  Suite s;
  s.description =
      "finite-difference complete monotonicity of g1 = 2Psi1(-z) and of the shifted "
      "g2 = g1 - eta1 e^{-2z}";
  s.hypotheses.id = "H8";
  s.hypotheses.constraints = {
      {"tau in (0,1)", [](const ParamMap& p) { return get(p, "tau") > 0 && get(p, "tau") < 1; }},
      {"d - tau >= 1", [](const ParamMap& p) { return get(p, "d") - get(p, "tau") >= 1; }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["tau"] = rng.uniform(0.2, 0.8);
    p["d"] = rng.uniform_int(2, 3);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const double tau = get(p, "tau"), d = get(p, "d");
    const FoxWrightSpec fw = h8_fw(tau, d);
    const double eta1 = eta1_constant(tau, d);
    auto g1 = [&](double z) { return eval_fw(fw, -z, cfg.eval_tol).value; };
    auto g2 = [&](double z) { return g1(z) - eta1 * std::exp(-2.0 * z); };
    const GridSpec grid{0.05, 6.0, std::min(cfg.grid_count, 30), GridSpacing::Linear};
    PropertyReport rep = check_complete_monotonicity(g1, grid, cfg.max_order, cfg.eps);
    rep.merge(check_complete_monotonicity(g2, grid, cfg.max_order, cfg.eps));
    return rep;
  };
  return s;
}

Suite make_h9() {
  return make_infeasible(
      "H9",
      {{"alpha in [(3-sqrt5)/2, 1)",
        [](const ParamMap& p) { return get(p, "alpha") >= kGolden && get(p, "alpha") < 1; }},
       {"min(d-2, 2(gamma + 1/(1-alpha))) >= 1",
        [](const ParamMap& p) {
          const double a = get(p, "alpha");
          return std::min(get(p, "d") - 2.0, 2.0 * (get(p, "gamma") + 1.0 / (1.0 - a))) >= 1.0;
        }},
       {"(1 + gamma (1-alpha)^2)/alpha + d/2 = 5/2",
        [](const ParamMap& p) {
          const double a = get(p, "alpha");
          return std::abs((1.0 + get(p, "gamma") * (1.0 - a) * (1.0 - a)) / a +
                          0.5 * get(p, "d") - 2.5) < 1e-9;
        }}},
      "at d = 3 the equality forces gamma = -1/(1-alpha), which makes "
      "2 (gamma + 1/(1-alpha)) = 0 < 1; larger d only lowers gamma further");
}

Suite make_h10() {
  return make_infeasible(
      "H10",
      {{"alpha in (0,1]",
        [](const ParamMap& p) { return get(p, "alpha") > 0 && get(p, "alpha") <= 1; }},
       {"1 + gamma/beta (1 - 1/alpha) = 1 + 1/(alpha beta) = 1/alpha",
        [](const ParamMap& p) {
          const double a = get(p, "alpha"), b = get(p, "beta"), g = get(p, "gamma");
          return std::abs(1.0 + 1.0 / (a * b) - 1.0 / a) < 1e-9 &&
                 std::abs(1.0 + (g / b) * (1.0 - 1.0 / a) - 1.0 / a) < 1e-9;
        }},
       {"2 (gamma + beta) >= 1",
        [](const ParamMap& p) { return 2.0 * (get(p, "gamma") + get(p, "beta")) >= 1.0; }}},
      "the equality chain forces beta = 1/(1-alpha) and gamma = -beta, so "
      "2 (gamma + beta) = 0 < 1");
}

Suite make_tau_kummer() {
  Suite s;
  s.description = "tau-Kummer ratio phi(b+delta tau, c+delta tau, -z)/phi(b, c, -z) decreasing";
  s.hypotheses.id = "tau-kummer";
  s.hypotheses.constraints = {
      {"c > b > 0",
       [](const ParamMap& p) { return get(p, "b") > 0 && get(p, "c") > get(p, "b"); }},
      {"tau > 0", [](const ParamMap& p) { return get(p, "tau") > 0; }},
      {"delta > 0", [](const ParamMap& p) { return get(p, "delta") > 0; }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["b"] = rng.uniform(0.5, 1.5);
    p["c"] = p["b"] + rng.uniform(0.3, 1.5);
    p["tau"] = rng.uniform(0.5, 1.5);
    p["delta"] = rng.uniform(0.3, 1.2);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const double b = get(p, "b"), c = get(p, "c"), tau = get(p, "tau"), dl = get(p, "delta");
    const FoxWrightSpec shifted = kummer_fw(b + dl * tau, c + dl * tau, tau);
    const FoxWrightSpec base = kummer_fw(b, c, tau);
    auto num = [&](double z) { return eval_fw(shifted, -z, cfg.eval_tol).value; };
    auto den = [&](double z) { return eval_fw(base, -z, cfg.eval_tol).value; };
    return ratio_decreasing(num, den, cfg);
  };
  return s;
}

Suite make_thm41() {
  Suite s;
  s.description =
      "complete monotonicity of s -> H_{3,3}^{2,2}(s)/s and positive definiteness of the "
      "radial form (Gram diagonal regularized at r = 1e-4)";
  s.hypotheses.id = "thm-4.1";
  s.hypotheses.constraints = {
      {"alpha in (0,1)",
       [](const ParamMap& p) { return get(p, "alpha") > 0 && get(p, "alpha") < 1; }},
      {"beta in (0,1)", [](const ParamMap& p) { return get(p, "beta") > 0 && get(p, "beta") < 1; }},
      {"gamma > 0", [](const ParamMap& p) { return get(p, "gamma") > 0; }},
      {"beta >= alpha * gamma",
       [](const ParamMap& p) { return get(p, "beta") >= get(p, "alpha") * get(p, "gamma"); }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["alpha"] = rng.uniform(0.2, 0.9);
    double gamma = rng.uniform(0.1, 1.6);
    while (p["alpha"] * gamma >= 0.9) gamma *= 0.7;
    p["gamma"] = gamma;
    p["beta"] = rng.uniform(p["alpha"] * gamma, 0.97);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const double alpha = get(p, "alpha"), beta = get(p, "beta"), gamma = get(p, "gamma");
    const HFunctionSpec spec(2, 2,
                             {{1.0, 1.0}, {1.0, 1.0}, {1.0 - beta + alpha, alpha}},
                             {{1.0, 0.5}, {2.0 - gamma, 1.0}, {0.5, 0.5}});
    const ContourSpec contour = choose_contour(spec, cfg.eval_tol);
    auto f = [&](double sarg) { return eval_h(spec, sarg, contour).value / sarg; };
    PropertyReport rep = check_complete_monotonicity(
        f, GridSpec{0.3, 4.0, 10, GridSpacing::Linear}, std::min(cfg.max_order, 4), cfg.eps);
    auto radial = [&](double r) {
      const double rr = std::max(std::abs(r), 1e-4);
      return f(rr * rr);
    };
    rep.merge(check_positive_definite(radial, 2, 8, 5, cfg.eps, 1234567));
    return rep;
  };
  return s;
}

Suite make_thm43() {
  Suite s;
  s.description = "complete monotonicity of the second Laplace-image family s -> H(s)/s";
  s.hypotheses.id = "thm-4.3";
  s.hypotheses.constraints = {
      {"alpha in (0,1]",
       [](const ParamMap& p) { return get(p, "alpha") > 0 && get(p, "alpha") <= 1; }},
      {"beta > 1/alpha - 1",
       [](const ParamMap& p) { return get(p, "beta") > 1.0 / get(p, "alpha") - 1.0; }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    const double alpha = rng.uniform(0.5, 0.95);
    const double lo = 1.0 / alpha - 1.0;
    const double hi = 1.0 / (1.0 - 0.75 * alpha);
    p["alpha"] = alpha;
    p["beta"] = lo + (hi - lo) * rng.uniform(0.1, 0.9);
    p["gamma"] = rng.uniform(-0.5, 1.0);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const double alpha = get(p, "alpha"), beta = get(p, "beta"), gamma = get(p, "gamma");
    const double ab = alpha * beta;
    const HFunctionSpec spec(2, 2,
                             {{1.0, 1.0}, {1.0, 1.0}, {-gamma / beta, 1.0 / alpha}},
                             {{1.0, 0.5}, {1.0 - (gamma + beta) / ab, 1.0 / ab}, {0.5, 0.5}});
    const ContourSpec contour = choose_contour(spec, cfg.eval_tol);
    auto f = [&](double sarg) { return eval_h(spec, sarg, contour).value / sarg; };
    return check_complete_monotonicity(f, GridSpec{0.3, 4.0, 10, GridSpacing::Linear},
                                       std::min(cfg.max_order, 4), cfg.eps);
  };
  return s;
}

Suite make_thm44() {
  Suite s;
  s.description =
      "weighted-integral ratio monotonicity: unit limit at delta -> 0, z-independence for "
      "constant psi, decreasing branch for psi = 1/(1+t)";
  s.hypotheses.id = "thm-4.4";
  s.hypotheses.constraints = {
      {"delta > 0", [](const ParamMap& p) { return get(p, "delta") > 0; }},
      {"sigma != 0", [](const ParamMap& p) { return get(p, "sigma") != 0; }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["delta"] = rng.uniform(0.4, 1.4);
    p["sigma"] = rng.uniform(0.5, 1.5);
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const HFunctionSpec exp_spec(0, 1, {{0.0, 1.0}}, {});
    const double a = 0.2, b = 3.0;
    auto psi = [](double t) { return 1.0 / (1.0 + t); };
    PropertyReport rep;
    rep.samples_tested = 1;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    rep.passed = true;

    const double unit = kappa_ratio(exp_spec, 1e-10, get(p, "sigma"), psi, a, b, 0.5);
    const double m1 = cfg.eps - std::abs(unit - 1.0);
    rep.worst_margin = std::min(rep.worst_margin, m1);
    if (m1 < 0) rep.failures.push_back({0, 0.5, unit, "delta -> 0 limit differs from 1"});

    auto flat = [](double) { return 0.7; };
    const double k1 = kappa_ratio(exp_spec, get(p, "delta"), get(p, "sigma"), flat, a, b, 0.25);
    const double k2 = kappa_ratio(exp_spec, get(p, "delta"), get(p, "sigma"), flat, a, b, 0.75);
    const double m2 = 1e-8 - std::abs(k1 - k2);
    rep.worst_margin = std::min(rep.worst_margin, m2);
    if (m2 < 0) rep.failures.push_back({0, 0.75, k2 - k1, "constant psi not z-independent"});

    // t psi'/psi = -t/(1+t) decreasing and sigma > 0: decreasing branch
    double prev = kappa_ratio(exp_spec, get(p, "delta"), get(p, "sigma"), psi, a, b, 0.04);
    for (int i = 1; i < 20; ++i) {
      const double z = 0.04 + 0.048 * i;
      const double cur = kappa_ratio(exp_spec, get(p, "delta"), get(p, "sigma"), psi, a, b, z);
      const double margin = (prev - cur) / std::max(1.0, std::abs(prev));
      rep.worst_margin = std::min(rep.worst_margin, margin);
      if (margin < -cfg.eps) rep.failures.push_back({0, z, margin, "ratio not decreasing"});
      prev = cur;
    }
    rep.passed = rep.worst_margin >= -cfg.eps;
    return rep;
  };
  return s;
}

Suite make_cor33() {
  Suite s;
  s.description = "non-negativity of the two reduced H_{1,2}^{2,0} kernel families";
  s.hypotheses.id = "cor-3.3";
  s.hypotheses.constraints = {
      {"alpha in (0,1)",
       [](const ParamMap& p) { return get(p, "alpha") > 0 && get(p, "alpha") < 1; }},
      {"beta in (0,1)", [](const ParamMap& p) { return get(p, "beta") > 0 && get(p, "beta") < 1; }},
      {"gamma > 0", [](const ParamMap& p) { return get(p, "gamma") > 0; }},
      {"beta >= alpha * gamma",
       [](const ParamMap& p) { return get(p, "beta") >= get(p, "alpha") * get(p, "gamma"); }},
      {"tau in (0,2]", [](const ParamMap& p) { return get(p, "tau") > 0 && get(p, "tau") <= 2; }},
      {"beta >= alpha", [](const ParamMap& p) { return get(p, "beta") >= get(p, "alpha"); }},
  };
  s.hypotheses.sampler = [](std::uint64_t seed) {
    SampleRng rng(seed);
    ParamMap p;
    p["alpha"] = rng.uniform(0.15, 0.7);
    p["beta"] = rng.uniform(p["alpha"], 0.97);
    // gamma with alpha*gamma <= beta and the pole lattices kept apart
    double gamma = rng.uniform(0.2, std::min(1.5, p["beta"] / p["alpha"]));
    const double frac = gamma - std::floor(gamma);
    if (frac < 0.1 || frac > 0.9 || std::abs(frac - 0.5) < 0.1)
      gamma = std::floor(gamma) + 0.3;
    p["gamma"] = gamma;
    p["tau"] = rng.uniform(std::max(0.6, p["alpha"] * 1.2), 2.0);
    p["d"] = 1 + 2 * rng.uniform_int(0, 1);  // odd d keeps the second family's lattices apart
    return p;
  };
  s.run_sample = [](const ParamMap& p, const SuiteConfig& cfg) {
    const double alpha = get(p, "alpha"), beta = get(p, "beta"), gamma = get(p, "gamma");
    const double tau = get(p, "tau"), d = get(p, "d");
    const HFunctionSpec first(0, 2, {{0.5 * d - 1.0, 0.5}, {gamma - 1.0, 0.5}},
                              {{beta - alpha, 0.5 * alpha}});
    const HFunctionSpec second(0, 2, {{0.5 * d - 0.5 * tau, 0.5}, {1.0 - 0.5 * tau, 0.5}},
                               {{beta - alpha, alpha / tau}});
    const GridSpec grid{0.05, 8.0, std::min(cfg.grid_count, 60), GridSpacing::Log};
    auto f1 = [&](double r) { return eval_h_series(first, r, cfg.eval_tol).value; };
    auto f2 = [&](double r) { return eval_h_series(second, r, cfg.eval_tol).value; };
    PropertyReport rep = check_nonnegativity(f1, grid, cfg.eps);
    rep.merge(check_nonnegativity(f2, grid, cfg.eps));
    return rep;
  };
  return s;
}

const SuiteTable& suites() {
  static const SuiteTable table = [] {
    SuiteTable t;
    t.emplace_back("H1", make_h1());
    t.emplace_back("H2", make_h2());
    t.emplace_back("H3", make_h3());
    t.emplace_back("H4", make_h4());
    t.emplace_back("H5", make_h5());
    t.emplace_back("H6", make_h6());
    t.emplace_back("H7", make_h7());
    t.emplace_back("H8", make_h8());
    t.emplace_back("H9", make_h9());
    t.emplace_back("H10", make_h10());
    t.emplace_back("tau-kummer", make_tau_kummer());
    t.emplace_back("thm-4.1", make_thm41());
    t.emplace_back("thm-4.3", make_thm43());
    t.emplace_back("thm-4.4", make_thm44());
    t.emplace_back("cor-3.3", make_cor33());
    return t;
  }();
  return table;
}

const std::map<std::string, std::string>& alias_map() {
  static const std::map<std::string, std::string> aliases = {
      {"thm-3.1", "H1"},  {"thm-3.2", "H2"},  {"thm-4.5", "H3"},
      {"cor-4.7", "H4"},  {"thm-4.6", "H4"},  {"cor-4.8", "H5"},
      {"cor-4.9", "H6"},  {"cor-4.10", "H7"}, {"thm-cm-eta1", "H8"},
      {"thm-cm-eta2", "H9"}, {"thm-cm-eta3", "H10"},
  };
  return aliases;
}

const Suite* find_suite(const std::string& id) {
  for (const auto& [key, suite] : suites())
    if (key == id) return &suite;
  return nullptr;
}

}  // namespace

HFunctionSpec h1_target_spec(double tau, double alpha, double beta, double gamma, double d) {
  return HFunctionSpec(
      2, 1, {{1.0, 1.0}, {alpha - beta + 1.0, alpha}},
      {{1.0 - 0.5 * d + 0.5 * tau, 0.5 * tau}, {2.0 - gamma, 1.0}, {0.5 * tau, 0.5 * tau}});
}

HFunctionSpec h2_target_spec(double tau, double alpha, double beta, double gamma, double d) {
  const double ab = alpha * beta;
  return HFunctionSpec(2, 1, {{1.0, 1.0}, {-gamma / beta, 1.0 / alpha}},
                       {{1.0 - 0.5 * d + 0.5 * tau, 0.5 * tau},
                        {1.0 - (gamma + beta) / ab, 1.0 / ab},
                        {0.5 * tau, 0.5 * tau}});
}

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> entries = [] {
    std::vector<TheoremEntry> out;
    for (const auto& [id, suite] : suites()) {
      TheoremEntry e;
      e.id = id;
      e.description = suite.description;
      for (const auto& [alias, target] : alias_map())
        if (target == id) e.aliases.push_back(alias);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

std::string canonical_theorem_id(const std::string& name) {
  const auto& aliases = alias_map();
  auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  return name;
}

bool is_registered_theorem(const std::string& name) {
  return find_suite(canonical_theorem_id(name)) != nullptr;
}

ParamMap draw_theorem_sample(const std::string& name, std::uint64_t stream) {
  const std::string id = canonical_theorem_id(name);
  const Suite* suite = find_suite(id);
  if (!suite) throw spec_error("unknown theorem: " + name);
  return suite->hypotheses.draw(stream);
}

PropertyReport run_theorem_sample(const std::string& name, const ParamMap& params,
                                  const SuiteConfig& config) {
  const std::string id = canonical_theorem_id(name);
  const Suite* suite = find_suite(id);
  if (!suite) throw spec_error("unknown theorem: " + name);
  suite->hypotheses.validate(params);
  PropertyReport rep = suite->run_sample(params, config);
  rep.theorem_id = id;
  return rep;
}

PropertyReport run_theorem_suite(const std::string& name, long samples, std::uint64_t seed,
                                 const SuiteConfig& config) {
  const std::string id = canonical_theorem_id(name);
  const Suite* suite = find_suite(id);
  if (!suite) throw spec_error("unknown theorem: " + name);
  if (samples < 1) throw spec_error("run_theorem_suite: samples >= 1 required");
  PropertyReport merged;
  merged.theorem_id = id;
  merged.seed = seed;
  merged.worst_margin = std::numeric_limits<double>::infinity();
  merged.passed = true;
  for (long i = 0; i < samples; ++i) {
    std::uint64_t stream = seed;
    for (long k = 0; k <= i; ++k) splitmix64(stream);  // per-sample substream key
    const ParamMap params = suite->hypotheses.draw(stream);
    PropertyReport rep = suite->run_sample(params, config);
    for (auto& f : rep.failures) f.sample_index = i;
    rep.samples_tested = 1;
    merged.merge(rep);
    merged.samples_tested = i + 1;
  }
  return merged;
}

double kappa_ratio(const HFunctionSpec& spec, double delta, double sigma,
                   const std::function<double(double)>& psi, double a, double b, double z,
                   double tol) {
  if (!(delta > 0.0 || std::abs(delta) < 1e-9))
    throw spec_error("kappa_ratio: delta must be positive");
  if (!(b > a && a >= 0.0)) throw spec_error("kappa_ratio: needs 0 <= a < b");
  const ContourSpec contour = choose_contour(spec, std::min(tol, 1e-9));
  // fixed composite Gauss grid shared by both integrals; the H factor is
  // z-independent and evaluated once per node
  const int panels = 48;
  const double width = (b - a) / panels;
  double num = 0.0, den = 0.0, min_h = std::numeric_limits<double>::infinity();
  static const double gx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                               0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double gw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                               0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};
  for (int pnl = 0; pnl < panels; ++pnl) {
    const double c = a + (pnl + 0.5) * width;
    const double h = 0.5 * width;
    for (int i = 0; i < 8; ++i) {
      for (double t : {c + h * gx[i], c - h * gx[i]}) {
        const double hv = eval_h(spec, t, contour).value;
        min_h = std::min(min_h, hv);
        const double w = gw[i] * h;
        const double psv = std::pow(psi(z * t), sigma);
        num += w * std::pow(t, delta - 1.0) * hv * psv;
        den += w * hv * psv / t;
      }
    }
  }
  if (min_h < -1e-8)
    throw precondition_error("kappa_ratio: kernel dips below -1e-8 on [a, b]");
  if (den == 0.0) throw convergence_error("kappa_ratio: degenerate denominator");
  return num / den;
}

}  // namespace foxh
