#include "foxh/bessel.hpp"

#include <cmath>

#include "foxh/errors.hpp"

namespace foxh {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double bessel_j(double nu, double x) {
  if (x < 0.0) throw spec_error("bessel_j: x must be >= 0");
  if (std::abs(nu - 0.5) < 1e-14) {
    if (x == 0.0) return 0.0;
    return std::sqrt(2.0 / (kPi * x)) * std::sin(x);
  }
  if (std::abs(nu + 0.5) < 1e-14) {
    if (x == 0.0) throw spec_error("bessel_j: J_{-1/2} diverges at 0");
    return std::sqrt(2.0 / (kPi * x)) * std::cos(x);
  }
  if (nu >= 0.0) {
    return std::cyl_bessel_j(nu, x);
  }
  // J_{-v}(x) = J_v(x) cos(v pi) - Y_v(x) sin(v pi), v = -nu > 0
  const double v = -nu;
  if (x == 0.0) throw spec_error("bessel_j: negative order diverges at 0");
  return std::cyl_bessel_j(v, x) * std::cos(v * kPi) - std::cyl_neumann(v, x) * std::sin(v * kPi);
}

double rescaled_bessel_j(double nu, double x) {
  if (nu < -0.5 - 1e-14) throw spec_error("rescaled_bessel_j: requires nu >= -1/2");
  const double ax = std::abs(x);
  if (std::abs(nu + 0.5) < 1e-14) return std::cos(ax);
  if (ax < 1e-4) {
    // series: 1 - x^2/(4(nu+1)) + x^4/(32 (nu+1)(nu+2))
    const double x2 = ax * ax;
    return 1.0 - x2 / (4.0 * (nu + 1.0)) + x2 * x2 / (32.0 * (nu + 1.0) * (nu + 2.0));
  }
  return std::exp(nu * std::log(2.0 / ax) + std::lgamma(nu + 1.0)) * bessel_j(nu, ax);
}

double bessel_zero_approx(double nu, int k) {
  const double beta = (k + 0.5 * nu - 0.25) * kPi;
  const double mu = 4.0 * nu * nu;
  return beta - (mu - 1.0) / (8.0 * beta);
}

}  // namespace foxh
