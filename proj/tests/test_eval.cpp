#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "foxh/eval.hpp"
#include "foxh/fox_wright.hpp"
#include "foxh/harness.hpp"
#include "oracles.hpp"

using foxh::cplx;
using foxh::HFunctionSpec;

namespace {

HFunctionSpec exp_spec() { return HFunctionSpec(0, 1, {{0.0, 1.0}}, {}); }

// random Fox-Wright spec whose image supports all three evaluation routes
foxh::FoxWrightSpec random_admissible_fw(foxh::SampleRng& rng) {
  const double A = rng.uniform(0.5, 1.5);
  const double lo = -std::min(0.8, A - 0.2);
  const double B = A + rng.uniform(lo, 0.8);  // delta = 1 + B - A in (0.2, 1.8)
  return foxh::FoxWrightSpec({{rng.uniform(0.6, 2.0), A}}, {{rng.uniform(0.6, 2.0), B}});
}

}  // namespace

TEST_CASE("choose_contour picks the gap midpoint") {
  const foxh::ContourSpec exp_contour = foxh::choose_contour(exp_spec(), 1e-10);
  CHECK(exp_contour.abscissa == doctest::Approx(0.5));
  CHECK(exp_contour.nodes >= 32);

  const HFunctionSpec both(1, 1, {{0.0, 1.0}}, {{0.0, 1.0}});  // left max 0, right min 1
  CHECK(foxh::choose_contour(both, 1e-10).abscissa == doctest::Approx(0.5));

  const HFunctionSpec interlaced(1, 1, {{-2.0, 1.0}}, {{1.0, 1.0}});  // left max 2, right min 0
  CHECK_THROWS_AS(foxh::choose_contour(interlaced, 1e-10), foxh::precondition_error);
}

TEST_CASE("eval_h reproduces the exponential") {
  const HFunctionSpec spec = exp_spec();
  const foxh::ContourSpec contour = foxh::choose_contour(spec, 1e-11);
  for (double z : {0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}) {
    const foxh::HEvalResult r = foxh::eval_h(spec, z, contour);
    CHECK(std::abs(r.value - std::exp(-z)) <= 1e-9);
    CHECK(r.imag_residual <= 1e-9);
    CHECK(r.tolerance_met);
  }
  CHECK(foxh::eval_h(spec, 1.0, 1e-10).value == doctest::Approx(0.36787944117144233).epsilon(1e-9));
  CHECK(foxh::eval_h(spec, 0.5, 1e-10).value == doctest::Approx(0.60653065971263342).epsilon(1e-9));
  CHECK_THROWS_AS(foxh::eval_h(spec, -1.0, contour), foxh::spec_error);
}

TEST_CASE("eval_h_series on integer-exponent specs") {
  const HFunctionSpec spec = exp_spec();
  CHECK(foxh::eval_h_series(spec, 1.0).value ==
        doctest::Approx(0.36787944117144233).epsilon(1e-11));
  CHECK(foxh::eval_h_series(spec, 0.0).value == doctest::Approx(1.0));

  // Mittag-Leffler image with gamma = 1, alpha = 2, beta = 1: H(-1) = E_{2,1}(1) = cosh 1
  const foxh::FoxWrightSpec ml({{1.0, 1.0}}, {{1.0, 2.0}});
  const auto img = foxh::from_fox_wright(ml);
  CHECK(foxh::eval_h_series(img.spec, -1.0).value ==
        doctest::Approx(std::cosh(1.0)).epsilon(1e-11));
  // and H(+1) = E_{2,1}(-1) = cos 1
  CHECK(foxh::eval_h_series(img.spec, 1.0).value == doctest::Approx(std::cos(1.0)).epsilon(1e-11));
}

TEST_CASE("eval_h_series guards") {
  // coinciding left lattices -> higher-order pole
  const HFunctionSpec doubled(0, 2, {{0.75, 0.5}, {0.75, 0.5}}, {{1.0, 1.0}});
  CHECK_THROWS_AS(foxh::eval_h_series(doubled, 0.3), foxh::pole_error);

  // C < 0: the left series is only asymptotic
  const HFunctionSpec e1 = HFunctionSpec(
      2, 1, {{1.0, 1.0}, {1.0, 0.5}}, {{1.0, 0.5}, {1.0, 1.0}, {0.5, 0.5}});
  CHECK(foxh::convergence_params(e1).big_c < 0.0);
  CHECK_THROWS_AS(foxh::eval_h_series(e1, 1.0), foxh::convergence_error);

  // fractional exponents reject negative arguments
  const HFunctionSpec frac(0, 1, {{0.5, 2.0}}, {});
  CHECK_THROWS_AS(foxh::eval_h_series(frac, -0.5), foxh::spec_error);
}

TEST_CASE("contour, residue series and Fox-Wright series agree pairwise") {
  for (int i = 0; i < 5; ++i) {
    foxh::SampleRng rng(977, i);
    const foxh::FoxWrightSpec fw = random_admissible_fw(rng);
    const auto img = foxh::from_fox_wright(fw);
    const foxh::ContourSpec contour = foxh::choose_contour(img.spec, 1e-10);
    for (double z : {0.25, 1.0, 4.0}) {
      const double via_contour = foxh::eval_h(img.spec, z, contour).value;
      const double via_series = foxh::eval_h_series(img.spec, z).value;
      const double via_fw = foxh::eval_fw(fw, -z).value;
      const double scale = std::max({std::abs(via_contour), std::abs(via_fw), 1e-30});
      CHECK(std::abs(via_contour - via_series) <= 1e-7 * scale);
      CHECK(std::abs(via_contour - via_fw) <= 1e-7 * scale);
    }
  }
}

TEST_CASE("argument scaling identity") {
  foxh::SampleRng rng(1384, 7);
  const auto img = foxh::from_fox_wright(random_admissible_fw(rng));
  for (double k : {0.5, 2.0, 3.0}) {
    const auto scaled = foxh::scale_argument(img.spec, k);
    for (double z : {0.5, 1.0, 2.0}) {
      const double lhs = foxh::eval_h(img.spec, z, 1e-10).value;
      const double rhs = scaled.prefactor * foxh::eval_h(scaled.spec, std::pow(z, k), 1e-10).value;
      CHECK(std::abs(lhs - rhs) <= 1e-7 * std::max(1.0, std::abs(lhs)));
    }
  }
  // scale k = 2 maps e^{-z} onto 2 H(z^2): H(1) = e^{-1}/2
  const auto half = foxh::scale_argument(exp_spec(), 2.0);
  CHECK(foxh::eval_h(half.spec, 1.0, 1e-10).value ==
        doctest::Approx(0.18393972058572117).epsilon(1e-8));
}

TEST_CASE("argument inversion identity") {
  foxh::SampleRng rng(553, 3);
  const auto img = foxh::from_fox_wright(random_admissible_fw(rng));
  const HFunctionSpec inv = foxh::invert_argument(img.spec);
  for (double z : {0.5, 1.0, 2.0}) {
    const double lhs = foxh::eval_h(img.spec, z, 1e-10).value;
    const double rhs = foxh::eval_h(inv, 1.0 / z, 1e-10).value;
    CHECK(std::abs(lhs - rhs) <= 1e-7 * std::max(1.0, std::abs(lhs)));
  }
  // exponential: H_inv(z) = e^{-1/z}
  const HFunctionSpec einv = foxh::invert_argument(exp_spec());
  CHECK(foxh::eval_h(einv, 2.0, 1e-10).value == doctest::Approx(std::exp(-0.5)).epsilon(1e-8));
}

TEST_CASE("power shift identity") {
  foxh::SampleRng rng(712, 11);
  const auto img = foxh::from_fox_wright(random_admissible_fw(rng));
  const double sigma = 0.8;
  const HFunctionSpec shifted = foxh::shift_power(img.spec, sigma);
  for (double z : {0.5, 1.0, 2.0}) {
    const double lhs = std::pow(z, sigma) * foxh::eval_h(img.spec, z, 1e-10).value;
    const double rhs = foxh::eval_h(shifted, z, 1e-10).value;
    CHECK(std::abs(lhs - rhs) <= 1e-7 * std::max(1.0, std::abs(lhs)));
  }
  // z e^{-z} at z = 1
  const HFunctionSpec zexp = foxh::shift_power(exp_spec(), 1.0);
  CHECK(foxh::eval_h(zexp, 1.0, 1e-10).value == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("reduction preserves the value") {
  foxh::SampleRng rng(2024, 1);
  const auto base = foxh::from_fox_wright(random_admissible_fw(rng));
  std::vector<foxh::ParamPair> up = base.spec.upper();
  up.insert(up.begin(), {1.0, 0.8});
  std::vector<foxh::ParamPair> lo = base.spec.lower();
  lo.push_back({1.0, 0.8});
  const HFunctionSpec augmented(base.spec.m(), base.spec.n() + 1, up, lo);
  const HFunctionSpec reduced = foxh::reduce_matching_pair(augmented);
  CHECK(reduced == base.spec);
  const double lhs = foxh::eval_h(augmented, 1.0, 1e-10).value;
  const double rhs = foxh::eval_h(reduced, 1.0, 1e-10).value;
  CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
}

TEST_CASE("asymptotic exponents") {
  CHECK(foxh::asymptotic_exponent(exp_spec(), foxh::Regime::Zero) == doctest::Approx(0.0));
  CHECK_THROWS_AS(foxh::asymptotic_exponent(exp_spec(), foxh::Regime::Infinity),
                  foxh::precondition_error);

  const double gamma = 1.4;
  const foxh::FoxWrightSpec ml({{gamma, 1.0}}, {{1.0, 2.0}});
  const auto img = foxh::from_fox_wright(ml);
  CHECK(foxh::asymptotic_exponent(img.spec, foxh::Regime::Infinity) == doctest::Approx(-gamma));
}

TEST_CASE("log-log slope near zero matches the zero exponent") {
  const foxh::FoxWrightSpec fw({{1.2, 1.0}}, {{1.5, 0.8}});
  const auto img = foxh::from_fox_wright(fw);
  const double sigma = 0.7;
  const HFunctionSpec shifted = foxh::shift_power(img.spec, sigma);
  CHECK(*foxh::convergence_params(shifted).zero_exponent == doctest::Approx(sigma));
  const double v1 = foxh::eval_h(shifted, 1e-4, 1e-10).value;
  const double v2 = foxh::eval_h(shifted, 1e-2, 1e-10).value;
  const double slope = std::log(v2 / v1) / std::log(1e2);
  CHECK(std::abs(slope - sigma) <= 0.05);
}
