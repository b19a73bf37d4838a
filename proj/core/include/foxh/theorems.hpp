#pragma once

#include "foxh/harness.hpp"
#include "foxh/hfun_spec.hpp"

namespace foxh {

struct SuiteConfig {
  double eps = 1e-6;        // margin tolerance of the checkers
  double eval_tol = 1e-8;   // evaluator tolerance
  int grid_count = 100;
  int max_order = 6;        // finite-difference order for CM checks
};

struct TheoremEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::string description;
};

const std::vector<TheoremEntry>& theorem_registry();
bool is_registered_theorem(const std::string& name);

/// Resolves aliases ("thm-3.1" -> "H1", ...).
std::string canonical_theorem_id(const std::string& name);

/// Draws `samples` hypothesis-satisfying parameter sets and runs the mapped
/// checkers.  Deterministic given (id, samples, seed, config).  Throws
/// infeasible_error when the hypothesis set admits no parameters and
/// spec_error for unknown ids.
PropertyReport run_theorem_suite(const std::string& name, long samples, std::uint64_t seed,
                                 const SuiteConfig& config = {});

/// One explicit sample; validates the hypothesis set first (violating
/// parameters raise precondition_error before any evaluation).
PropertyReport run_theorem_sample(const std::string& name, const ParamMap& params,
                                  const SuiteConfig& config = {});

/// Validated draw from the suite's hypothesis sampler, keyed by an explicit
/// per-sample stream value.
ParamMap draw_theorem_sample(const std::string& name, std::uint64_t stream);

/// H-spec of the section-3 positivity targets (built from the sampled
/// parameters); exposed for tests.
HFunctionSpec h1_target_spec(double tau, double alpha, double beta, double gamma, double d);
HFunctionSpec h2_target_spec(double tau, double alpha, double beta, double gamma, double d);

/// Weighted-integral ratio of the ratio-monotonicity theorem:
///   K(z) = Int_a^b t^{delta-1} H(t) psi(z t)^sigma dt
///        / Int_a^b t^{-1}      H(t) psi(z t)^sigma dt.
/// The kernel must stay non-negative on [a, b] (checked on a sample grid).
double kappa_ratio(const HFunctionSpec& spec, double delta, double sigma,
                   const std::function<double(double)>& psi, double a, double b, double z,
                   double tol = 1e-9);

}  // namespace foxh
