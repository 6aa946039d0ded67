#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace losdof::numerics {

struct QuadratureOptions {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  std::size_t max_evaluations = std::size_t{1} << 20;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// Kronrod 15-point abscissae/weights; the embedded Gauss 7-point rule uses the odd abscissae.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature: always bisects the panel with the
/// largest error estimate. Stops at max(rel_tol*|I|, abs_tol) or at the evaluation cap,
/// in which case `converged` is false and `value` is the best estimate.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, const QuadratureOptions& options = {}) {
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_15(f, a, b));
  result.evaluations = 15;
  double total = panels.top().value;
  double error = panels.top().error;

  auto done = [&] { return error <= std::max(options.rel_tol * std::abs(total), options.abs_tol); };
  while (!done() && result.evaluations + 30 <= options.max_evaluations) {
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in floating point.
      panels.push(worst);
      break;
    }
    const detail::Panel left = detail::gauss_kronrod_15(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_15(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  result.value = total;
  result.error = error;
  result.converged = done();
  return result;
}

}  // namespace losdof::numerics
