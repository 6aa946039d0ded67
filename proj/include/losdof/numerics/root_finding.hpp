#pragma once

#include <cmath>

#include "losdof/errors.hpp"

namespace losdof::numerics {

/// Bisection on a sign-changing bracket [lo, hi]. Returns the midpoint of the final bracket
/// once its width drops below x_tol, or when the bracket stops shrinking in floating point.
template <class F>
double bisect(F&& f, double lo, double hi, double x_tol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw ComputationError("bisect: bracket does not change sign", 0.5 * (lo + hi));
  for (int it = 0; it < 1100 && (hi - lo) > x_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace losdof::numerics
