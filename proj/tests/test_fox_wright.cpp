#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "foxh/eval.hpp"
#include "foxh/fox_wright.hpp"
#include "foxh/harness.hpp"
#include "oracles.hpp"

using foxh::FoxWrightSpec;

TEST_CASE("classify") {
  const auto r11 = foxh::classify(FoxWrightSpec({{1.0, 1.0}}, {{1.0, 1.0}}));
  CHECK(*r11.delta == doctest::Approx(1.0));
  CHECK(*r11.mu == doctest::Approx(0.0));
  CHECK(*r11.weight_balance == doctest::Approx(0.0));

  const auto r10 = foxh::classify(FoxWrightSpec({{1.0, 1.0}}, {}));
  CHECK(*r10.delta == doctest::Approx(0.0));
  CHECK(*r10.radius == doctest::Approx(1.0));

  // half-weight pair against a unit weight: rho = 2^{1/2} 2^{1/2} = 2
  const auto rh = foxh::classify(FoxWrightSpec({{0.75, 0.5}, {0.75, 0.5}}, {{1.0, 1.0}}));
  CHECK(*rh.radius == doctest::Approx(2.0));
  CHECK(*rh.delta == doctest::Approx(1.0));
}

TEST_CASE("eval_fw closed forms") {
  CHECK(foxh::eval_fw(FoxWrightSpec({{1.0, 1.0}}, {{1.0, 1.0}}), 1.0).value ==
        doctest::Approx(2.7182818284590452).epsilon(1e-12));
  // 1Psi0[(1,1)](z) = 1/(1-z)
  CHECK(foxh::eval_fw(FoxWrightSpec({{1.0, 1.0}}, {}), 0.5).value ==
        doctest::Approx(2.0).epsilon(1e-11));
  CHECK_THROWS_AS(foxh::eval_fw(FoxWrightSpec({{1.0, 1.0}}, {}), 1.5), foxh::convergence_error);
  // delta < 0 diverges outright
  CHECK_THROWS_AS(foxh::eval_fw(FoxWrightSpec({{1.0, 2.5}}, {}), 0.1), foxh::convergence_error);
}

TEST_CASE("unit-weight case reduces to 2F1") {
  const FoxWrightSpec fw({{1.1, 1.0}, {0.7, 1.0}}, {{2.3, 1.0}});
  const double direct = foxh::eval_fw(fw, 0.3).value;
  const double via_2f1 = std::tgamma(1.1) * std::tgamma(0.7) / std::tgamma(2.3) *
                         oracle::pfq_sum({1.1, 0.7}, {2.3}, 0.3);
  CHECK(direct == doctest::Approx(via_2f1).epsilon(1e-11));
  CHECK(direct == doctest::Approx(1.18630063149893506).epsilon(1e-11));
}

TEST_CASE("to_generalized_hypergeometric") {
  const auto red = foxh::to_generalized_hypergeometric(FoxWrightSpec({{2.0, 1.0}}, {{3.0, 1.0}}));
  CHECK(red.coefficient == doctest::Approx(0.5).epsilon(1e-13));
  REQUIRE(red.upper.size() == 1);
  CHECK(red.upper[0] == doctest::Approx(2.0));
  // at z = 0 every pFq equals 1, so the Fox-Wright value is the coefficient
  CHECK(foxh::eval_fw(FoxWrightSpec({{2.0, 1.0}}, {{3.0, 1.0}}), 0.0).value ==
        doctest::Approx(red.coefficient));
  CHECK_THROWS_AS(foxh::to_generalized_hypergeometric(FoxWrightSpec({{2.0, 2.0}}, {{3.0, 1.0}})),
                  foxh::precondition_error);
}

TEST_CASE("mittag_leffler") {
  CHECK(foxh::mittag_leffler(1.0, 1.0, 1.0, 1.0).value ==
        doctest::Approx(2.7182818284590452).epsilon(1e-12));
  CHECK(foxh::mittag_leffler(0.7, 1.3, 2.1, 0.0).value ==
        doctest::Approx(1.0 / std::tgamma(1.3)).epsilon(1e-13));
  CHECK(foxh::mittag_leffler(2.0, 1.0, 1.0, 1.0).value ==
        doctest::Approx(1.5430806348152437).epsilon(1e-10));
  CHECK_THROWS_AS(foxh::mittag_leffler(-1.0, 1.0, 1.0, 1.0), foxh::spec_error);
}

TEST_CASE("mittag_leffler agrees with its 1Psi1 form") {
  foxh::SampleRng rng(42, 5);
  for (int i = 0; i < 8; ++i) {
    const double alpha = rng.uniform(0.4, 2.2);
    const double beta = rng.uniform(0.3, 2.0);
    const double gamma = rng.uniform(0.3, 2.5);
    const double z = rng.uniform(-2.0, 2.0);
    const double direct = foxh::mittag_leffler(alpha, beta, gamma, z).value;
    const double via_fw =
        foxh::eval_fw(FoxWrightSpec({{gamma, 1.0}}, {{beta, alpha}}), z).value /
        std::tgamma(gamma);
    CHECK(direct == doctest::Approx(via_fw).epsilon(1e-10));
  }
}

TEST_CASE("series agrees with the contour route through the H image") {
  for (int i = 0; i < 10; ++i) {
    foxh::SampleRng rng(31337, i);
    const double A = rng.uniform(0.5, 1.4);
    const double B = A + rng.uniform(-std::min(0.75, A - 0.2), 0.75);
    const FoxWrightSpec fw({{rng.uniform(0.6, 1.8), A}}, {{rng.uniform(0.6, 1.8), B}});
    const auto img = foxh::from_fox_wright(fw);
    const double z = rng.uniform(0.05, 1.0);
    const double lhs = foxh::eval_fw(fw, -z).value;
    const double rhs = foxh::eval_h(img.spec, z, 1e-10).value;
    CHECK(std::abs(lhs - rhs) <= 1e-7 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("truncation terminates and terms eventually decay") {
  for (int i = 0; i < 6; ++i) {
    foxh::SampleRng rng(555, i);
    const FoxWrightSpec fw({{rng.uniform(0.5, 2.0), rng.uniform(0.4, 1.0)}},
                           {{rng.uniform(0.5, 2.0), rng.uniform(0.4, 1.0)}});
    const auto res = foxh::eval_fw(fw, rng.uniform(-3.0, 3.0));
    CHECK(res.terms < 100000);
    CHECK(res.terms >= 3);
  }
}

TEST_CASE("pole in a lower parameter zeroes single terms only") {
  // b = 0 with B = 1: Gamma(0), Gamma(-1)... all on poles until k lifts it; the
  // series is still finite and matches the brute-force sum
  const FoxWrightSpec fw({{1.0, 1.0}}, {{-2.0, 1.0}});
  const double got = foxh::eval_fw(fw, 0.5).value;
  double want = 0.0;
  for (int k = 3; k < 60; ++k) {  // Gamma(-2+k) finite from k = 3 on
    want += std::tgamma(1.0 + k) / std::tgamma(-2.0 + k) * std::pow(0.5, k) / std::tgamma(k + 1.0);
  }
  CHECK(got == doctest::Approx(want).epsilon(1e-10));
}
