#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foxh/errors.hpp"

namespace foxh {

enum class GridSpacing { Linear, Log };

struct GridSpec {
  double lo;
  double hi;
  int count;
  GridSpacing spacing = GridSpacing::Linear;

  std::vector<double> points() const;
};

struct PointFailure {
  long sample_index;
  double grid_point;
  double value;  // NaN flags an evaluation failure at the point
  std::string detail;
};

/// Outcome of one verification run.  `worst_margin` is the most negative
/// observed value of the asserted-non-negative quantity (scaled where the
/// checker scales); passed <=> worst_margin >= -eps and every point
/// evaluated.
struct PropertyReport {
  std::string theorem_id;
  long samples_tested = 0;
  double worst_margin = 0.0;
  std::vector<PointFailure> failures;
  bool passed = false;
  long evaluation_failures = 0;
  std::uint64_t seed = 0;
  std::string note;

  void merge(const PropertyReport& other);
};

using ParamMap = std::map<std::string, double>;

/// Named constraint over a parameter map.
struct Constraint {
  std::string text;
  std::function<bool(const ParamMap&)> holds;
};

/// Hypothesis set: id, constraints, and a sampler drawing from a box inside
/// the constraint region.  Samples are validated on construction of the
/// draw; a violating explicit sample raises precondition_error before any
/// evaluation.
struct HypothesisSet {
  std::string id;
  std::vector<Constraint> constraints;
  std::function<ParamMap(std::uint64_t)> sampler;  // keyed by a per-sample rng seed

  void validate(const ParamMap& params) const;
  ParamMap draw(std::uint64_t seed) const;  // sample + validate
};

// ---- deterministic rng helpers ------------------------------------------

std::uint64_t splitmix64(std::uint64_t& state);

/// Per-sample stream: all suites derive their randomness from
/// (seed, sample_index) so parallel sample evaluation cannot change results.
struct SampleRng {
  explicit SampleRng(std::uint64_t seed, std::uint64_t stream = 0);
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  int uniform_int(int lo, int hi);       // inclusive

 private:
  std::uint64_t state_;
};

// ---- checkers -------------------------------------------------------------

/// min f over the grid; pass iff >= -eps.  Evaluation failures are recorded
/// per point (not fatal) and counted.
PropertyReport check_nonnegativity(const std::function<double(double)>& f, const GridSpec& grid,
                                   double eps);

/// Finite-difference surrogate of complete monotonicity:
/// (-1)^k Delta_h^k f(x) >= -eps * max(1, |f(x)|) for k = 0..max_order with
/// h = (hi - lo) / (count * max_order).
PropertyReport check_complete_monotonicity(const std::function<double(double)>& f,
                                           const GridSpec& interval, int max_order, double eps);

/// Same surrogate applied to log f for orders 1..max_order; f must be
/// positive on the grid.
PropertyReport check_log_cm(const std::function<double(double)>& f, const GridSpec& interval,
                            int max_order, double eps);

/// Gram-matrix test of positive definiteness: for each trial draw num_points
/// distinct points in R^d, form [f(r_jk)] (signed difference in d = 1,
/// Euclidean norm otherwise) and require the smallest eigenvalue to be
/// >= -eps * spectral radius.
PropertyReport check_positive_definite(const std::function<double(double)>& f, int d,
                                       int num_points, int trials, double eps,
                                       std::uint64_t seed);

enum class Direction { Increasing, Decreasing };

/// Consecutive grid ratios num/den follow the claimed direction within
/// eps * max(1, |ratio|) slack.
PropertyReport check_ratio_monotone(const std::function<double(double)>& num,
                                    const std::function<double(double)>& den,
                                    const GridSpec& interval, Direction direction, double eps);

// ---- integral functionals ---------------------------------------------

struct ChebyshevResult {
  double lhs;  // Int p f * Int p g
  double rhs;  // Int p * Int p f g
  bool holds;  // lhs <= rhs + eps (synchronous direction)
};

ChebyshevResult chebyshev_check(const std::function<double(double)>& p,
                                const std::function<double(double)>& f,
                                const std::function<double(double)>& g, double a, double b,
                                double eps = 1e-9);

}  // namespace foxh
