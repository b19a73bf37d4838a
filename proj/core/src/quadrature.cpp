#include "foxh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace foxh {

namespace {

// Gauss 7 / Kronrod 15 nodes on [0, 1] half-interval (abscissa, gauss weight,
// kronrod weight); first row is the center node.
constexpr double kGK[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
constexpr double kGL16x[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                              0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
constexpr double kGL16w[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                              0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};

double gk15(const std::function<double(double)>& f, double a, double b, double& err,
            long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(c);
  ++evals;
  double g7 = kGK[0][1] * f0;
  double k15 = kGK[0][2] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kGK[i][0];
    const double fi = f(c + dx) + f(c - dx);
    evals += 2;
    g7 += kGK[i][1] * fi;
    k15 += kGK[i][2] * fi;
  }
  g7 *= h;
  k15 *= h;
  err = std::pow(200.0 * std::abs(g7 - k15), 1.5);
  return k15;
}

}  // namespace

double gauss_panel16(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    acc += kGL16w[i] * (f(c + h * kGL16x[i]) + f(c - h * kGL16x[i]));
  }
  return acc * h;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_intervals) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  struct Seg {
    double a, b, value, error;
  };
  std::vector<Seg> stack;
  double err0;
  double v0 = gk15(f, a, b, err0, out.evals);
  stack.push_back({a, b, v0, err0});
  double total = v0;
  double total_err = err0;
  int splits = 0;
  while (!stack.empty() && splits < max_intervals) {
    // refine the worst segment
    auto worst = std::max_element(stack.begin(), stack.end(),
                                  [](const Seg& x, const Seg& y) { return x.error < y.error; });
    if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    Seg seg = *worst;
    stack.erase(worst);
    const double mid = 0.5 * (seg.a + seg.b);
    if (mid == seg.a || mid == seg.b) continue;  // interval at roundoff floor
    double e1, e2;
    const double v1 = gk15(f, seg.a, mid, e1, out.evals);
    const double v2 = gk15(f, mid, seg.b, e2, out.evals);
    total += v1 + v2 - seg.value;
    total_err += e1 + e2 - seg.error;
    stack.push_back({seg.a, mid, v1, e1});
    stack.push_back({mid, seg.b, v2, e2});
    ++splits;
  }
  out.value = total;
  out.error = std::abs(total_err);
  out.converged = out.error <= std::max(abs_tol, rel_tol * std::abs(total));
  return out;
}

double wynn_epsilon_limit(const double* s, int len) {
  if (len <= 0) return 0.0;
  if (len == 1) return s[0];
  std::vector<double> cur(s, s + len);
  std::vector<double> prev(len + 1, 0.0);  // epsilon_{-1} column
  double best = cur.back();
  for (int col = 1; col < len; ++col) {
    std::vector<double> next(len - col);
    bool degenerate = false;
    for (int i = 0; i < len - col; ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (std::abs(diff) < 1e-300) {
        degenerate = true;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (degenerate) break;
    prev = cur;
    cur = next;
    if (col % 2 == 0 && !cur.empty()) best = cur.back();
    if (cur.size() == 1 && col % 2 == 0) best = cur[0];
  }
  // even columns estimate the limit
  return best;
}

QuadResult integrate_cells_accelerated(const std::function<double(double)>& f,
                                       const std::function<double(int)>& edge, double tol,
                                       int max_cells) {
  QuadResult out;
  std::vector<double> partial;
  partial.reserve(64);
  double sum = 0.0;
  double prev_accel = 0.0;
  bool have_prev = false;
  for (int k = 0; k < max_cells; ++k) {
    const double a = edge(k);
    const double b = edge(k + 1);
    QuadResult cell = integrate_adaptive(f, a, b, tol * 0.05, 1e-10, 400);
    out.evals += cell.evals;
    sum += cell.value;
    partial.push_back(sum);
    if (partial.size() >= 6) {
      const int window = std::min<int>(24, static_cast<int>(partial.size()));
      const double accel =
          wynn_epsilon_limit(partial.data() + partial.size() - window, window);
      if (have_prev) {
        const double diff = std::abs(accel - prev_accel);
        if (diff <= tol * std::max(1.0, std::abs(accel)) &&
            std::abs(cell.value) <= 0.5 * std::max(1.0, std::abs(accel))) {
          out.value = accel;
          out.error = diff;
          out.converged = true;
          return out;
        }
      }
      prev_accel = accel;
      have_prev = true;
    }
  }
  out.value = have_prev ? prev_accel : sum;
  out.error = std::abs(out.value - sum);
  out.converged = false;
  return out;
}

}  // namespace foxh
