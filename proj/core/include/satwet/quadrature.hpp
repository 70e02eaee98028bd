#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace satwet {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_subdivisions = 4096;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (symmetric half).
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
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
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

template <typename F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_centre = f(centre);
  double kronrod = kKronrodWeights[7] * f_centre;
  double gauss = kGaussWeights[3] * f_centre;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// The panel with the largest error estimate is bisected until the summed
/// estimate satisfies max(abs_tol, rel_tol * |value|) or the subdivision cap
/// is hit; the latter returns converged = false.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    const QuadratureOptions& opts = {}) {
  if (!(opts.rel_tol > 0.0) && !(opts.abs_tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_15(f, a, b));
  result.evaluations = 15;
  double value = panels.top().value;
  double error = panels.top().error;

  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(value)); };

  while (error > tolerance() && result.subdivisions < opts.max_subdivisions) {
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      panels.push(worst);
      break;  // panel too narrow to split further
    }
    const detail::Panel left = detail::gauss_kronrod_15(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_15(f, mid, worst.b);
    result.evaluations += 30;
    ++result.subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift accumulated by the incremental updates.
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  result.value = value;
  result.abs_error = error;
  result.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  return result;
}

}  // namespace satwet
