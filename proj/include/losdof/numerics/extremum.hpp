#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace losdof::numerics {

struct Extremum {
  double x;
  double value;
};

struct Extrema {
  Extremum max;
  Extremum min;
};

namespace detail {

// Larger value wins; exact ties go to the smaller abscissa.
inline bool better_max(const Extremum& a, const Extremum& b) {
  return a.value > b.value || (a.value == b.value && a.x < b.x);
}
inline bool better_min(const Extremum& a, const Extremum& b) {
  return a.value < b.value || (a.value == b.value && a.x < b.x);
}

}  // namespace detail

/// Golden-section maximization of a unimodal f on [a, b]. `best` seeds the result with an
/// already-evaluated point (typically the grid point that bracketed the extremum).
template <class F>
Extremum golden_section_maximize(F& f, double a, double b, double x_tol, Extremum best) {
  constexpr double inv_phi = 0.6180339887498948482;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > x_tol; ++it) {
    if (f1 >= f2) {
      if (detail::better_max({x1, f1}, best)) best = {x1, f1};
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      if (detail::better_max({x2, f2}, best)) best = {x2, f2};
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  if (detail::better_max({x1, f1}, best)) best = {x1, f1};
  if (detail::better_max({x2, f2}, best)) best = {x2, f2};
  return best;
}

template <class F>
Extremum golden_section_minimize(F& f, double a, double b, double x_tol, Extremum best) {
  auto neg = [&f](double x) { return -f(x); };
  const Extremum r = golden_section_maximize(neg, a, b, x_tol, {best.x, -best.value});
  return {r.x, -r.value};
}

/// Global extrema of f over [a, b]: uniform grid of `grid_points` samples, then a golden-section
/// refinement around every discrete local extremum. Both endpoints are always candidates.
template <class F>
Extrema grid_extrema(F&& f, double a, double b, std::size_t grid_points, double relative_x_tol = 1e-10) {
  if (grid_points < 3) grid_points = 3;
  std::vector<double> xs(grid_points);
  std::vector<double> fs(grid_points);
  const double step = (b - a) / static_cast<double>(grid_points - 1);
  for (std::size_t i = 0; i < grid_points; ++i) {
    xs[i] = (i + 1 == grid_points) ? b : a + step * static_cast<double>(i);
    fs[i] = f(xs[i]);
  }
  const double x_tol = relative_x_tol * (b - a);

  Extrema result{{xs[0], fs[0]}, {xs[0], fs[0]}};
  const Extremum last{xs.back(), fs.back()};
  if (detail::better_max(last, result.max)) result.max = last;
  if (detail::better_min(last, result.min)) result.min = last;

  for (std::size_t i = 1; i + 1 < grid_points; ++i) {
    const double left = fs[i - 1], mid = fs[i], right = fs[i + 1];
    if (mid >= left && mid >= right && (mid > left || mid > right)) {
      const Extremum e = golden_section_maximize(f, xs[i - 1], xs[i + 1], x_tol, {xs[i], mid});
      if (detail::better_max(e, result.max)) result.max = e;
    }
    if (mid <= left && mid <= right && (mid < left || mid < right)) {
      const Extremum e = golden_section_minimize(f, xs[i - 1], xs[i + 1], x_tol, {xs[i], mid});
      if (detail::better_min(e, result.min)) result.min = e;
    }
  }
  return result;
}

}  // namespace losdof::numerics
