#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxh/gamma.hpp"

namespace foxh {

/// One parameter pair of an H-function row.  In the upper row the pair enters
/// the kernel as Gamma(A s + a) (first n entries) or 1/Gamma(1 - a - A s)
/// (the rest); in the lower row as Gamma(1 - b - B s) (first m entries) or
/// 1/Gamma(B s + b).
struct ParamPair {
  double a;
  double A;
};

bool operator==(const ParamPair& x, const ParamPair& y);

enum class SpecConvention { Paper, Standard };

/// Parameterization of a Fox H-function.
///
/// Canonical storage follows the transposed index layout used by sources that
/// write H_{q,p}^{n,m}: `upper` is the length-p list of (a_i, A_i) whose first
/// n entries produce the left pole family, `lower` the length-q list of
/// (b_j, B_j) whose first m entries produce the right pole family.  The kernel
/// is
///
///   K(s) = prod_{j<=n} Gamma(A_j s + a_j) prod_{j<=m} Gamma(1 - b_j - B_j s)
///        / [ prod_{j>m} Gamma(B_j s + b_j) prod_{j>n} Gamma(1 - a_j - A_j s) ]
///
/// and H(z) = (1/2 pi i) Int K(s) z^{-s} ds over a vertical line separating
/// the two pole families.  `standard_form` accepts the common H^{m,n}_{p,q}
/// layout, which maps onto canonical storage by exchanging the two rows and
/// the two order counts.
class HFunctionSpec {
 public:
  HFunctionSpec(int m, int n, std::vector<ParamPair> upper, std::vector<ParamPair> lower);

  /// Build from the standard H^{m,n}_{p,q}[z | (a,A)_p ; (b,B)_q] layout.
  static HFunctionSpec standard_form(int m, int n, std::vector<ParamPair> upper,
                                     std::vector<ParamPair> lower);

  int m() const { return m_; }
  int n() const { return n_; }
  int p() const { return static_cast<int>(upper_.size()); }
  int q() const { return static_cast<int>(lower_.size()); }
  const std::vector<ParamPair>& upper() const { return upper_; }
  const std::vector<ParamPair>& lower() const { return lower_; }

  bool operator==(const HFunctionSpec& other) const;

 private:
  int m_;
  int n_;
  std::vector<ParamPair> upper_;
  std::vector<ParamPair> lower_;
};

/// Fox-Wright parameter lists; series sum_k prod Gamma(a+kA) / prod
/// Gamma(b+kB) z^k / k!.  Weights may be zero in the series; conversion to an
/// H-function requires them strictly positive.
struct FoxWrightSpec {
  std::vector<ParamPair> upper;
  std::vector<ParamPair> lower;

  FoxWrightSpec(std::vector<ParamPair> up, std::vector<ParamPair> lo);
  int p() const { return static_cast<int>(upper.size()); }
  int q() const { return static_cast<int>(lower.size()); }
};

/// Structural and convergence parameters of a spec.
///
/// C, D are the weight sums governing transform existence and the exponential
/// decay rate of the kernel along vertical lines.  zero/inf exponents are the
/// power-law orders at 0 and infinity (unset when the relevant gamma family is
/// empty).  delta, weight_balance, radius and mu are the Fox-Wright series
/// parameters; for an H-spec they are populated from the Fox-Wright preimage
/// when one exists and left unset otherwise.  `radius` always carries the
/// product formula prod A^-A prod B^B; it bounds the series domain only in
/// the delta == 0 boundary case (delta > 0 means entire).
struct ConvergenceReport {
  std::optional<double> delta;
  std::optional<double> weight_balance;  // sum B - sum A  (= delta - 1)
  std::optional<double> radius;
  std::optional<double> mu;
  double big_c = 0.0;
  double big_d = 0.0;
  std::optional<double> zero_exponent;
  std::optional<double> inf_exponent;
  bool from_fox_wright = false;
};

/// Arithmetic progression of poles: start, start + step, start + 2 step, ...
/// `factor` is the index of the generating gamma factor within its row.
struct PoleLattice {
  double start;
  double step;
  int factor;
};

struct PoleSets {
  std::vector<PoleLattice> left;   // poles of Gamma(A_j s + a_j), j <= n
  std::vector<PoleLattice> right;  // poles of Gamma(1 - b_j - B_j s), j <= m
};

/// log of the Mellin kernel K(s).  Throws pole_error (with factor and lattice
/// index) when s hits a numerator pole.
cplx log_mellin_kernel(const HFunctionSpec& spec, cplx s);

/// K(s) itself; additionally throws overflow_error when exp overflows.
cplx mellin_kernel(const HFunctionSpec& spec, cplx s);

PoleSets pole_sets(const HFunctionSpec& spec);

/// max over the left lattices / min over the right lattices (unset when the
/// family is empty).
std::optional<double> left_pole_max(const HFunctionSpec& spec);
std::optional<double> right_pole_min(const HFunctionSpec& spec);

ConvergenceReport convergence_params(const HFunctionSpec& spec);
ConvergenceReport convergence_params(const FoxWrightSpec& fw);

/// Argument inversion: evaluating the result at z equals evaluating the input
/// at 1/z.  An involution.
HFunctionSpec invert_argument(const HFunctionSpec& spec);

struct ScaledSpec {
  HFunctionSpec spec;
  double prefactor;  // H_in(z) = prefactor * H_out(z^k)
};

/// Weight scaling: H_in(z) = k * H_out(z^k), k > 0.
ScaledSpec scale_argument(const HFunctionSpec& spec, double k);

/// Cancels upper.front() against lower.back() when they are equal and the
/// order counts make one a numerator and the other a denominator factor
/// (n >= 1, q > m).  Result has p, q and n reduced by one.
HFunctionSpec reduce_matching_pair(const HFunctionSpec& spec);

/// Power shift: z^sigma H_in(z) = H_out(z); shifts a_i by sigma A_i and b_j
/// by sigma B_j.
HFunctionSpec shift_power(const HFunctionSpec& spec, double sigma);

/// H-image of a Fox-Wright function.  The image satisfies
/// pPsi_q(z) = H(-z), i.e. h_argument(z) gives the H argument for series
/// argument z.
struct FwImage {
  HFunctionSpec spec;
  static double h_argument(double z) { return -z; }
};

/// Requires strictly positive weights.
FwImage from_fox_wright(const FoxWrightSpec& fw);

/// Inverse of from_fox_wright when the spec has the image shape.
std::optional<FoxWrightSpec> fox_wright_preimage(const HFunctionSpec& spec);

/// Meijer G parameters (all weights 1 implicitly).
struct MeijerGSpec {
  int m;
  int n;
  std::vector<double> upper;  // a-row, length p
  std::vector<double> lower;  // b-row, length q
};

struct MeijerReduction {
  MeijerGSpec g;
  double scale;     // H(z) = scale * G(z^exponent)
  double exponent;  // = 1/A
};

/// Requires all weights equal to a common A > 0.
MeijerReduction to_meijer_g(const HFunctionSpec& spec);

/// Discriminant of the left residue series: C > 0 converges everywhere,
/// C == 0 converges for |z| < series_boundary(spec).
double series_boundary(const HFunctionSpec& spec);

// ---- JSON spec documents ----------------------------------------------
// {"convention": "paper"|"standard", "m": int, "n": int,
//  "upper": [[a, A], ...], "lower": [[b, B], ...]}

std::string to_json_string(const HFunctionSpec& spec,
                           SpecConvention convention = SpecConvention::Paper);
HFunctionSpec h_spec_from_json(const std::string& text);
HFunctionSpec h_spec_from_file(const std::string& path);

std::string to_json_string(const FoxWrightSpec& fw);
FoxWrightSpec fw_spec_from_json(const std::string& text);
FoxWrightSpec fw_spec_from_file(const std::string& path);

}  // namespace foxh
