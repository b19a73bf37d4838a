#include "foxh/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "foxh/quadrature.hpp"

namespace foxh {

std::vector<double> GridSpec::points() const {
  if (!(lo < hi)) throw spec_error("grid: lo < hi required");
  if (count < 2) throw spec_error("grid: count >= 2 required");
  std::vector<double> pts(count);
  if (spacing == GridSpacing::Linear) {
    const double h = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) pts[i] = lo + i * h;
  } else {
    if (!(lo > 0.0)) throw spec_error("grid: log spacing requires lo > 0");
    const double h = (std::log(hi) - std::log(lo)) / (count - 1);
    for (int i = 0; i < count; ++i) pts[i] = std::exp(std::log(lo) + i * h);
  }
  return pts;
}

void PropertyReport::merge(const PropertyReport& other) {
  samples_tested += other.samples_tested;
  worst_margin = std::min(worst_margin, other.worst_margin);
  evaluation_failures += other.evaluation_failures;
  passed = passed && other.passed;
  for (const auto& f : other.failures) {
    if (failures.size() < 200) failures.push_back(f);
  }
  if (!other.note.empty()) {
    if (!note.empty()) note += "; ";
    note += other.note;
  }
}

void HypothesisSet::validate(const ParamMap& params) const {
  for (const auto& c : constraints) {
    if (!c.holds(params))
      throw precondition_error("hypothesis " + id + ": sample violates \"" + c.text + "\"");
  }
}

ParamMap HypothesisSet::draw(std::uint64_t seed) const {
  const ParamMap params = sampler(seed);
  validate(params);
  return params;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) {
  state_ = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  for (int i = 0; i < 4; ++i) splitmix64(state_);
}

double SampleRng::uniform() {
  return (splitmix64(state_) >> 11) * 0x1.0p-53;
}

double SampleRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SampleRng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(uniform() * (hi - lo + 1));
}

namespace {

double protected_eval(const std::function<double(double)>& f, double x, PropertyReport& rep,
                      long sample_index) {
  try {
    return f(x);
  } catch (const std::exception& e) {
    rep.failures.push_back(
        {sample_index, x, std::numeric_limits<double>::quiet_NaN(), e.what()});
    ++rep.evaluation_failures;
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

PropertyReport check_nonnegativity(const std::function<double(double)>& f, const GridSpec& grid,
                                   double eps) {
  PropertyReport rep;
  rep.samples_tested = 1;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (double x : grid.points()) {
    const double v = protected_eval(f, x, rep, 0);
    if (std::isnan(v)) continue;
    if (v < rep.worst_margin) rep.worst_margin = v;
    if (v < -eps && rep.failures.size() < 200) rep.failures.push_back({0, x, v, "negative value"});
  }
  if (!std::isfinite(rep.worst_margin)) rep.worst_margin = -std::numeric_limits<double>::infinity();
  rep.passed = rep.worst_margin >= -eps && rep.evaluation_failures == 0;
  return rep;
}

PropertyReport check_complete_monotonicity(const std::function<double(double)>& f,
                                           const GridSpec& interval, int max_order, double eps) {
  if (max_order < 0) throw spec_error("check_complete_monotonicity: max_order >= 0 required");
  PropertyReport rep;
  rep.samples_tested = 1;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  const double h = (interval.hi - interval.lo) / (interval.count * std::max(max_order, 1));
  // binomial coefficients up to max_order
  std::vector<std::vector<double>> binom(max_order + 1);
  for (int k = 0; k <= max_order; ++k) {
    binom[k].resize(k + 1);
    binom[k][0] = binom[k][k] = 1.0;
    for (int j = 1; j < k; ++j) binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
  }
  for (double x : interval.points()) {
    // cache f on the difference stencil
    std::vector<double> fx(max_order + 1);
    bool bad = false;
    for (int j = 0; j <= max_order; ++j) {
      fx[j] = protected_eval(f, x + j * h, rep, 0);
      if (std::isnan(fx[j])) bad = true;
    }
    if (bad) continue;
    const double scale = std::max(1.0, std::abs(fx[0]));
    for (int k = 0; k <= max_order; ++k) {
      // (-1)^k Delta_h^k f(x) = sum_j (-1)^j C(k,j) f(x + j h)
      double diff = 0.0;
      for (int j = 0; j <= k; ++j) {
        const double w = (j % 2 == 0) ? binom[k][j] : -binom[k][j];
        diff += w * fx[j];
      }
      const double margin = diff / scale;
      if (margin < rep.worst_margin) rep.worst_margin = margin;
      if (margin < -eps && rep.failures.size() < 200)
        rep.failures.push_back({0, x, margin, "alternation fails at order " + std::to_string(k)});
    }
  }
  if (!std::isfinite(rep.worst_margin)) rep.worst_margin = -std::numeric_limits<double>::infinity();
  rep.passed = rep.worst_margin >= -eps && rep.evaluation_failures == 0;
  return rep;
}

PropertyReport check_log_cm(const std::function<double(double)>& f, const GridSpec& interval,
                            int max_order, double eps) {
  auto logf = [&f](double x) {
    const double v = f(x);
    if (!(v > 0.0)) throw precondition_error("check_log_cm: non-positive value at x");
    return std::log(v);
  };
  // orders 1..max_order: drop the order-0 row by checking the shifted
  // first-difference family of log f
  PropertyReport rep;
  rep.samples_tested = 1;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  const double h = (interval.hi - interval.lo) / (interval.count * std::max(max_order, 1));
  std::vector<std::vector<double>> binom(max_order + 1);
  for (int k = 0; k <= max_order; ++k) {
    binom[k].resize(k + 1);
    binom[k][0] = binom[k][k] = 1.0;
    for (int j = 1; j < k; ++j) binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
  }
  for (double x : interval.points()) {
    std::vector<double> fx(max_order + 1);
    bool bad = false;
    for (int j = 0; j <= max_order; ++j) {
      fx[j] = protected_eval(logf, x + j * h, rep, 0);
      if (std::isnan(fx[j])) bad = true;
    }
    if (bad) continue;
    const double scale = std::max(1.0, std::abs(fx[0]));
    for (int k = 1; k <= max_order; ++k) {
      double diff = 0.0;
      for (int j = 0; j <= k; ++j) {
        const double w = (j % 2 == 0) ? binom[k][j] : -binom[k][j];
        diff += w * fx[j];
      }
      const double margin = diff / scale;
      if (margin < rep.worst_margin) rep.worst_margin = margin;
      if (margin < -eps && rep.failures.size() < 200)
        rep.failures.push_back(
            {0, x, margin, "log alternation fails at order " + std::to_string(k)});
    }
  }
  if (!std::isfinite(rep.worst_margin)) rep.worst_margin = -std::numeric_limits<double>::infinity();
  rep.passed = rep.worst_margin >= -eps && rep.evaluation_failures == 0;
  return rep;
}

PropertyReport check_positive_definite(const std::function<double(double)>& f, int d,
                                       int num_points, int trials, double eps,
                                       std::uint64_t seed) {
  if (d < 1 || num_points < 2) throw spec_error("check_positive_definite: d >= 1, N >= 2");
  PropertyReport rep;
  rep.samples_tested = trials;
  rep.seed = seed;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    SampleRng rng(seed, static_cast<std::uint64_t>(trial));
    std::vector<std::vector<double>> pts;
    for (int attempt = 0; attempt < 10 && pts.empty(); ++attempt) {
      std::vector<std::vector<double>> cand(num_points, std::vector<double>(d));
      for (auto& p : cand)
        for (double& c : p) c = rng.uniform(-5.0, 5.0);
      double min_dist = std::numeric_limits<double>::infinity();
      for (int i = 0; i < num_points; ++i)
        for (int j = i + 1; j < num_points; ++j) {
          double s = 0.0;
          for (int k = 0; k < d; ++k) s += (cand[i][k] - cand[j][k]) * (cand[i][k] - cand[j][k]);
          min_dist = std::min(min_dist, std::sqrt(s));
        }
      if (min_dist > 1e-3) pts = std::move(cand);  // degenerate set -> redraw
    }
    if (pts.empty()) {
      ++rep.evaluation_failures;
      continue;
    }
    Eigen::MatrixXd gram(num_points, num_points);
    bool bad = false;
    for (int i = 0; i < num_points && !bad; ++i) {
      for (int j = 0; j < num_points; ++j) {
        double r;
        if (d == 1) {
          r = pts[i][0] - pts[j][0];
        } else {
          double s = 0.0;
          for (int k = 0; k < d; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
          r = std::sqrt(s);
        }
        const double v = protected_eval(f, r, rep, trial);
        if (std::isnan(v)) {
          bad = true;
          break;
        }
        gram(i, j) = v;
      }
    }
    if (bad) continue;
    gram = 0.5 * (gram + gram.transpose().eval());  // symmetrize roundoff
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const double lo_ev = es.eigenvalues().minCoeff();
    const double radius = std::max(std::abs(es.eigenvalues().minCoeff()),
                                   std::abs(es.eigenvalues().maxCoeff()));
    const double margin = radius > 0.0 ? lo_ev / radius : 0.0;
    if (margin < rep.worst_margin) rep.worst_margin = margin;
    if (margin < -eps && rep.failures.size() < 200)
      rep.failures.push_back({trial, 0.0, margin, "negative eigenvalue"});
  }
  if (!std::isfinite(rep.worst_margin)) rep.worst_margin = -std::numeric_limits<double>::infinity();
  rep.passed = rep.worst_margin >= -eps && rep.evaluation_failures == 0;
  return rep;
}

PropertyReport check_ratio_monotone(const std::function<double(double)>& num,
                                    const std::function<double(double)>& den,
                                    const GridSpec& interval, Direction direction, double eps) {
  PropertyReport rep;
  rep.samples_tested = 1;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  const auto pts = interval.points();
  std::vector<double> ratio(pts.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dv = protected_eval(den, pts[i], rep, 0);
    if (std::isnan(dv)) continue;
    if (dv == 0.0) {
      rep.failures.push_back({0, pts[i], dv, "zero denominator"});
      ++rep.evaluation_failures;
      continue;
    }
    const double nv = protected_eval(num, pts[i], rep, 0);
    if (std::isnan(nv)) continue;
    ratio[i] = nv / dv;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (std::isnan(ratio[i]) || std::isnan(ratio[i + 1])) continue;
    const double step =
        direction == Direction::Decreasing ? ratio[i] - ratio[i + 1] : ratio[i + 1] - ratio[i];
    const double margin = step / std::max(1.0, std::abs(ratio[i]));
    if (margin < rep.worst_margin) rep.worst_margin = margin;
    if (margin < -eps && rep.failures.size() < 200)
      rep.failures.push_back({0, pts[i], margin, "direction violated"});
  }
  if (!std::isfinite(rep.worst_margin)) rep.worst_margin = -std::numeric_limits<double>::infinity();
  rep.passed = rep.worst_margin >= -eps && rep.evaluation_failures == 0;
  return rep;
}

ChebyshevResult chebyshev_check(const std::function<double(double)>& p,
                                const std::function<double(double)>& f,
                                const std::function<double(double)>& g, double a, double b,
                                double eps) {
  auto quad = [&](const std::function<double(double)>& h) {
    const QuadResult r = integrate_adaptive(h, a, b, 1e-11, 1e-10, 4000);
    if (!r.converged && r.error > 1e-6)
      throw convergence_error("chebyshev_check: integral did not converge");
    return r.value;
  };
  const double ip = quad(p);
  const double ipf = quad([&](double t) { return p(t) * f(t); });
  const double ipg = quad([&](double t) { return p(t) * g(t); });
  const double ipfg = quad([&](double t) { return p(t) * f(t) * g(t); });
  ChebyshevResult res;
  res.lhs = ipf * ipg;
  res.rhs = ip * ipfg;
  res.holds = res.lhs <= res.rhs + eps * std::max(1.0, std::abs(res.rhs));
  return res;
}

}  // namespace foxh
