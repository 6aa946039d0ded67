#pragma once

#include <cstddef>

#include "losdof/geometry.hpp"

namespace losdof {

/// Local spatial bandwidth at receiver arc length l, with the extremal spatial
/// frequencies and the source arc lengths that attain them.
struct BandwidthSample {
  double l;
  double w;  ///< kappa_max - kappa_min, cycles per wavelength
  double kappa_max;
  double kappa_min;
  double q_max;
  double q_min;
};

struct GridSearchOptions {
  std::size_t grid_points = 4096;
  double relative_x_tolerance = 1e-10;
};

/// Closed form for v = e_z. Accepts valid and marginal placements.
BandwidthSample local_bandwidth_z(double l, const Placement& placement, const ArrayConfig& cfg);

/// Closed form for v = e_x, split at R|cos(theta)| = L_s/2. Accepts valid and marginal
/// placements as long as the receiver point stays off the source side (l + R sin(theta) > 0).
BandwidthSample local_bandwidth_x(double l, const Placement& placement, const ArrayConfig& cfg);

/// Any orientation: global extrema of the spatial frequency over the source array by a uniform
/// grid plus golden-section refinement around every discrete local extremum.
BandwidthSample local_bandwidth_general(double l, const Placement& placement, const Orientation& orientation,
                                        const ArrayConfig& cfg, const GridSearchOptions& options = {});

/// Any orientation, using the fact that q -> kappa(l, q) has at most one stationary point:
/// the extrema are among the two endpoints and that point.
BandwidthSample local_bandwidth_stationary(double l, const Placement& placement, const Orientation& orientation,
                                           const ArrayConfig& cfg);

enum class ExtremumMethod { stationary_point, grid_search };

struct KNumberOptions {
  ExtremumMethod method = ExtremumMethod::stationary_point;
  double rel_tol = 1e-6;
  std::size_t max_evaluations = std::size_t{1} << 20;
  GridSearchOptions grid{};
};

/// K number: integral of the local bandwidth over the receiving array. Requires a valid placement.
/// Throws ComputationError (with the best estimate) if the quadrature does not converge.
double k_number(const Placement& placement, const Orientation& orientation, const ArrayConfig& cfg,
                const KNumberOptions& options = {});

/// K number under a constant bandwidth: W * L_r.
double k_number_const(double bandwidth, const ArrayConfig& cfg);

}  // namespace losdof
