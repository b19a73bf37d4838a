#include "foxh/hfun_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace foxh {

namespace {

constexpr double kPairTol = 1e-12;

void validate(int m, int n, const std::vector<ParamPair>& upper,
              const std::vector<ParamPair>& lower) {
  const int p = static_cast<int>(upper.size());
  const int q = static_cast<int>(lower.size());
  if (n < 0 || n > p) throw spec_error("spec: n must satisfy 0 <= n <= p");
  if (m < 0 || m > q) throw spec_error("spec: m must satisfy 0 <= m <= q");
  if (m + n < 1) throw spec_error("spec: m + n >= 1 required (degenerate kernel)");
  for (const auto& pr : upper)
    if (!(pr.A > 0.0)) throw spec_error("spec: upper weights must be positive");
  for (const auto& pr : lower)
    if (!(pr.A > 0.0)) throw spec_error("spec: lower weights must be positive");
}

double sum_weights(const std::vector<ParamPair>& row) {
  return std::accumulate(row.begin(), row.end(), 0.0,
                         [](double acc, const ParamPair& p) { return acc + p.A; });
}

double split_weights(const std::vector<ParamPair>& row, int head) {
  // sum of first `head` weights minus sum of the rest
  double sum = 0.0;
  for (int j = 0; j < static_cast<int>(row.size()); ++j)
    sum += (j < head ? row[j].A : -row[j].A);
  return sum;
}

}  // namespace

bool operator==(const ParamPair& x, const ParamPair& y) {
  return std::abs(x.a - y.a) <= kPairTol && std::abs(x.A - y.A) <= kPairTol;
}

HFunctionSpec::HFunctionSpec(int m, int n, std::vector<ParamPair> upper,
                             std::vector<ParamPair> lower)
    : m_(m), n_(n), upper_(std::move(upper)), lower_(std::move(lower)) {
  validate(m_, n_, upper_, lower_);
}

HFunctionSpec HFunctionSpec::standard_form(int m, int n, std::vector<ParamPair> upper,
                                           std::vector<ParamPair> lower) {
  // standard kernel: prod_{j<=m} Gamma(b_j + B_j s) prod_{i<=n} Gamma(1-a_i-A_i s) / ...
  // which is the canonical kernel with the rows and order counts exchanged.
  return HFunctionSpec(n, m, std::move(lower), std::move(upper));
}

bool HFunctionSpec::operator==(const HFunctionSpec& other) const {
  if (m_ != other.m_ || n_ != other.n_) return false;
  if (upper_.size() != other.upper_.size() || lower_.size() != other.lower_.size()) return false;
  for (std::size_t i = 0; i < upper_.size(); ++i)
    if (!(upper_[i] == other.upper_[i])) return false;
  for (std::size_t j = 0; j < lower_.size(); ++j)
    if (!(lower_[j] == other.lower_[j])) return false;
  return true;
}

FoxWrightSpec::FoxWrightSpec(std::vector<ParamPair> up, std::vector<ParamPair> lo)
    : upper(std::move(up)), lower(std::move(lo)) {
  for (const auto& pr : upper)
    if (pr.A < 0.0) throw spec_error("fox-wright: weights must be >= 0");
  for (const auto& pr : lower)
    if (pr.A < 0.0) throw spec_error("fox-wright: weights must be >= 0");
}

cplx log_mellin_kernel(const HFunctionSpec& spec, cplx s) {
  cplx acc(0.0, 0.0);
  const auto& up = spec.upper();
  const auto& lo = spec.lower();
  const bool real_line = std::abs(s.imag()) < kPoleTol;
  for (int j = 0; j < spec.p(); ++j) {
    const cplx arg = up[j].A * s + up[j].a;
    if (j < spec.n()) {
      if (real_line && near_nonpositive_integer(arg.real(), kPoleTol)) {
        const long idx = std::lround(-arg.real());
        throw pole_error("mellin_kernel: upper factor " + std::to_string(j) +
                             " at left lattice point " + std::to_string(idx),
                         j, idx);
      }
      acc += log_gamma(arg);
    } else {
      acc -= log_gamma(cplx(1.0) - arg);  // denominator pole -> kernel zero; log -> -inf
    }
  }
  for (int j = 0; j < spec.q(); ++j) {
    const cplx arg = lo[j].A * s + lo[j].a;
    if (j < spec.m()) {
      const cplx refl = cplx(1.0) - arg;
      if (real_line && near_nonpositive_integer(refl.real(), kPoleTol)) {
        const long idx = std::lround(-refl.real());
        throw pole_error("mellin_kernel: lower factor " + std::to_string(j) +
                             " at right lattice point " + std::to_string(idx),
                         j, idx);
      }
      acc += log_gamma(refl);
    } else {
      acc -= log_gamma(arg);
    }
  }
  return acc;
}

cplx mellin_kernel(const HFunctionSpec& spec, cplx s) {
  cplx lk;
  try {
    lk = log_mellin_kernel(spec, s);
  } catch (const pole_error&) {
    throw;
  }
  if (lk.real() > 709.0) throw overflow_error("mellin_kernel: value overflows double range");
  if (lk.real() == -std::numeric_limits<double>::infinity()) return cplx(0.0, 0.0);
  return std::exp(lk);
}

PoleSets pole_sets(const HFunctionSpec& spec) {
  PoleSets sets;
  for (int j = 0; j < spec.n(); ++j) {
    const auto& pr = spec.upper()[j];
    sets.left.push_back({-pr.a / pr.A, -1.0 / pr.A, j});
  }
  for (int j = 0; j < spec.m(); ++j) {
    const auto& pr = spec.lower()[j];
    sets.right.push_back({(1.0 - pr.a) / pr.A, 1.0 / pr.A, j});
  }
  return sets;
}

std::optional<double> left_pole_max(const HFunctionSpec& spec) {
  std::optional<double> best;
  for (int j = 0; j < spec.n(); ++j) {
    const double start = -spec.upper()[j].a / spec.upper()[j].A;
    if (!best || start > *best) best = start;
  }
  return best;
}

std::optional<double> right_pole_min(const HFunctionSpec& spec) {
  std::optional<double> best;
  for (int j = 0; j < spec.m(); ++j) {
    const double start = (1.0 - spec.lower()[j].a) / spec.lower()[j].A;
    if (!best || start < *best) best = start;
  }
  return best;
}

ConvergenceReport convergence_params(const FoxWrightSpec& fw) {
  ConvergenceReport rep;
  const double sum_a_w = sum_weights(fw.upper);
  const double sum_b_w = sum_weights(fw.lower);
  rep.weight_balance = sum_b_w - sum_a_w;
  rep.delta = 1.0 + *rep.weight_balance;
  double log_rho = 0.0;
  for (const auto& pr : fw.upper)
    if (pr.A > 0.0) log_rho -= pr.A * std::log(pr.A);
  for (const auto& pr : fw.lower)
    if (pr.A > 0.0) log_rho += pr.A * std::log(pr.A);
  rep.radius = std::exp(log_rho);
  double mu = 0.5 * (fw.p() - fw.q());
  for (const auto& pr : fw.lower) mu += pr.a;
  for (const auto& pr : fw.upper) mu -= pr.a;
  rep.mu = mu;
  rep.from_fox_wright = true;

  bool positive = true;
  for (const auto& pr : fw.upper) positive = positive && pr.A > 0.0;
  for (const auto& pr : fw.lower) positive = positive && pr.A > 0.0;
  if (positive) {
    const auto img = from_fox_wright(fw);
    const ConvergenceReport h = convergence_params(img.spec);
    rep.big_c = h.big_c;
    rep.big_d = h.big_d;
    rep.zero_exponent = h.zero_exponent;
    rep.inf_exponent = h.inf_exponent;
  }
  return rep;
}

ConvergenceReport convergence_params(const HFunctionSpec& spec) {
  ConvergenceReport rep;
  rep.big_c = sum_weights(spec.upper()) - sum_weights(spec.lower());
  rep.big_d = split_weights(spec.lower(), spec.m()) + split_weights(spec.upper(), spec.n());
  if (spec.n() >= 1) {
    double c = std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.n(); ++j)
      c = std::min(c, spec.upper()[j].a / spec.upper()[j].A);
    rep.zero_exponent = c;
  }
  if (spec.m() >= 1) {
    double d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.m(); ++j)
      d = std::min(d, (spec.lower()[j].a - 1.0) / spec.lower()[j].A);
    rep.inf_exponent = d;
  }
  if (auto fw = fox_wright_preimage(spec)) {
    const ConvergenceReport fr = convergence_params(*fw);
    rep.delta = fr.delta;
    rep.weight_balance = fr.weight_balance;
    rep.radius = fr.radius;
    rep.mu = fr.mu;
    rep.from_fox_wright = true;
  }
  return rep;
}

HFunctionSpec invert_argument(const HFunctionSpec& spec) {
  std::vector<ParamPair> new_upper;
  new_upper.reserve(spec.lower().size());
  for (const auto& pr : spec.lower()) new_upper.push_back({1.0 - pr.a, pr.A});
  std::vector<ParamPair> new_lower;
  new_lower.reserve(spec.upper().size());
  for (const auto& pr : spec.upper()) new_lower.push_back({1.0 - pr.a, pr.A});
  return HFunctionSpec(spec.n(), spec.m(), std::move(new_upper), std::move(new_lower));
}

ScaledSpec scale_argument(const HFunctionSpec& spec, double k) {
  if (!(k > 0.0)) throw spec_error("scale_argument: k must be positive");
  std::vector<ParamPair> up = spec.upper();
  std::vector<ParamPair> lo = spec.lower();
  for (auto& pr : up) pr.A *= k;
  for (auto& pr : lo) pr.A *= k;
  return {HFunctionSpec(spec.m(), spec.n(), std::move(up), std::move(lo)), k};
}

HFunctionSpec reduce_matching_pair(const HFunctionSpec& spec) {
  if (spec.n() < 1 || spec.q() <= spec.m())
    throw precondition_error("reduce_matching_pair: requires n >= 1 and q > m");
  if (!(spec.upper().front() == spec.lower().back()))
    throw precondition_error(
        "reduce_matching_pair: upper front pair does not match lower back pair");
  std::vector<ParamPair> up(spec.upper().begin() + 1, spec.upper().end());
  std::vector<ParamPair> lo(spec.lower().begin(), spec.lower().end() - 1);
  return HFunctionSpec(spec.m(), spec.n() - 1, std::move(up), std::move(lo));
}

HFunctionSpec shift_power(const HFunctionSpec& spec, double sigma) {
  std::vector<ParamPair> up = spec.upper();
  std::vector<ParamPair> lo = spec.lower();
  for (auto& pr : up) pr.a += sigma * pr.A;
  for (auto& pr : lo) pr.a += sigma * pr.A;
  return HFunctionSpec(spec.m(), spec.n(), std::move(up), std::move(lo));
}

FwImage from_fox_wright(const FoxWrightSpec& fw) {
  for (const auto& pr : fw.upper)
    if (!(pr.A > 0.0))
      throw spec_error("from_fox_wright: positive weights required");
  for (const auto& pr : fw.lower)
    if (!(pr.A > 0.0))
      throw spec_error("from_fox_wright: positive weights required");
  std::vector<ParamPair> up;
  up.reserve(fw.lower.size() + 1);
  up.push_back({0.0, 1.0});
  for (const auto& pr : fw.lower) up.push_back({1.0 - pr.a, pr.A});
  std::vector<ParamPair> lo;
  lo.reserve(fw.upper.size());
  for (const auto& pr : fw.upper) lo.push_back({1.0 - pr.a, pr.A});
  const int m = static_cast<int>(lo.size());
  return {HFunctionSpec(m, 1, std::move(up), std::move(lo))};
}

std::optional<FoxWrightSpec> fox_wright_preimage(const HFunctionSpec& spec) {
  if (spec.n() != 1 || spec.m() != spec.q() || spec.p() < 1) return std::nullopt;
  if (!(spec.upper().front() == ParamPair{0.0, 1.0})) return std::nullopt;
  std::vector<ParamPair> fw_upper;
  fw_upper.reserve(spec.lower().size());
  for (const auto& pr : spec.lower()) fw_upper.push_back({1.0 - pr.a, pr.A});
  std::vector<ParamPair> fw_lower;
  fw_lower.reserve(spec.upper().size() - 1);
  for (std::size_t j = 1; j < spec.upper().size(); ++j)
    fw_lower.push_back({1.0 - spec.upper()[j].a, spec.upper()[j].A});
  return FoxWrightSpec(std::move(fw_upper), std::move(fw_lower));
}

MeijerReduction to_meijer_g(const HFunctionSpec& spec) {
  double common = 0.0;
  bool first = true;
  auto check = [&](double A) {
    if (first) {
      common = A;
      first = false;
    } else if (std::abs(A - common) > kPairTol) {
      throw precondition_error("to_meijer_g: all weights must equal a common A");
    }
  };
  for (const auto& pr : spec.upper()) check(pr.A);
  for (const auto& pr : spec.lower()) check(pr.A);
  if (first) throw precondition_error("to_meijer_g: empty parameter lists");

  // substituting u = A s maps the kernel onto a unit-weight one:
  // H(z) = (1/A) G(z^{1/A}) with the G rows taken from the opposite-side lists.
  MeijerGSpec g;
  g.m = spec.n();
  g.n = spec.m();
  for (const auto& pr : spec.lower()) g.upper.push_back(pr.a);
  for (const auto& pr : spec.upper()) g.lower.push_back(pr.a);
  return {std::move(g), 1.0 / common, 1.0 / common};
}

double series_boundary(const HFunctionSpec& spec) {
  double log_b = 0.0;
  for (const auto& pr : spec.upper()) log_b += pr.A * std::log(pr.A);
  for (const auto& pr : spec.lower()) log_b -= pr.A * std::log(pr.A);
  return std::exp(log_b);
}

}  // namespace foxh
