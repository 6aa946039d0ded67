#pragma once

// Ground-plane case study: maximum / expected K numbers under 3D or 2D orientation freedom,
// the spatial multiplexing regions they define, and CDFs of K over those regions.
//
// Far-range K numbers all follow K = |<v, u>| L_s L_r / R with u the projection direction:
//   k_max_3d = sin(theta) L_s L_r / R            (v = +-u)
//   k_max_2d = sqrt(1 - cos^2 sin^2 psi) k_max_3d (v = ground projection of u)
//   k_exp_3d = k_max_3d / 2,  k_exp_2d = (2/pi) k_max_2d.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "losdof/ecdf.hpp"
#include "losdof/exact_bandwidth.hpp"
#include "losdof/geometry.hpp"

namespace losdof {

enum class MultiplexMode { max, expected };

class RegionSpec {
 public:
  /// Requires K_0 > 0 and Z_s > L_s/2.
  RegionSpec(ArrayConfig cfg, double source_height, double k0, OrientationConstraint constraint,
             MultiplexMode mode);

  const ArrayConfig& config() const noexcept { return cfg_; }
  double source_height() const noexcept { return source_height_; }
  double k0() const noexcept { return k0_; }
  OrientationConstraint constraint() const noexcept { return constraint_; }
  MultiplexMode mode() const noexcept { return mode_; }

  /// G_0 = L_s L_r / K_0, in wavelengths.
  double g0() const noexcept { return cfg_.source_length() * cfg_.receiver_length() / k0_; }
  /// Largest R on the region (reached at X_r = 0); the region is nonempty iff Z_s < this.
  double max_radius() const noexcept;

 private:
  ArrayConfig cfg_;
  double source_height_;
  double k0_;
  OrientationConstraint constraint_;
  MultiplexMode mode_;
};

enum class DistributionKind { uni3d, uni2d };

struct OrientationDistribution {
  DistributionKind kind = DistributionKind::uni3d;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

struct OptimalOrientation {
  double k;
  Orientation orientation;
};

double k_approx(const Placement& placement, const Orientation& orientation, const ArrayConfig& cfg);
OptimalOrientation k_max_3d(const Placement& placement, const ArrayConfig& cfg);
double k_max_2d(const Placement& placement, double psi, const ArrayConfig& cfg);
double k_exp_3d(const Placement& placement, const ArrayConfig& cfg);
double k_exp_2d(const Placement& placement, double psi, const ArrayConfig& cfg);

/// The mode/constraint-appropriate asymptotic K at ground point (X_r, Y_r), Y_r >= 0.
double region_k(const RegionSpec& spec, double x, double y);
bool region_membership(const RegionSpec& spec, double x, double y);

struct RegionBoundary {
  std::vector<std::pair<double, double>> points;  ///< (X_r, Y_r), X_r >= 0, Y_r from 0 up to y_max
  bool nonempty = false;
  double y_max = 0.0;
};

/// Quarter of the boundary curve in the X_r >= 0, Y_r >= 0 quadrant; the region is symmetric in both.
/// 3D families use the closed form, 2D families bisect per Y_r.
RegionBoundary region_boundary(const RegionSpec& spec, std::size_t n_points);

/// Boundary abscissa at Y_r (0 if Y_r lies beyond the region). Requires a nonempty region.
double region_boundary_x(const RegionSpec& spec, double y);

/// Uniform draw in the GCS; deterministic in (seed, stream, index).
Vector3<double> sample_gcs_direction(const OrientationDistribution& dist, std::uint64_t index);
Orientation sample_orientation(const OrientationDistribution& dist, double psi, std::uint64_t index);

struct SearchOptions {
  std::size_t grid_n = 64;  ///< zenith samples; azimuth uses 2 grid_n
  int refinement_passes = 2;
  KNumberOptions k_options{};
};

/// Exhaustive search for the orientation maximizing the exact K number: a coarse grid over the
/// constraint set (upper hemisphere in 3D, ground-plane half circle in 2D), then coordinate-wise
/// golden-section refinement around the best cell.
OptimalOrientation optimal_orientation_search(const Placement& placement, double psi, OrientationConstraint constraint,
                                              const ArrayConfig& cfg, const SearchOptions& options = {});

enum class CdfMethod { asymptotic, exact };

struct CdfOptions {
  std::size_t expectation_draws = 1000;  ///< orientation draws per grid point for the exact expectation
  SearchOptions search{};
  std::size_t threads = 0;  ///< 0 = default_thread_count()
};

struct CdfResult {
  EmpiricalCdf cdf;
  bool empty = true;
  std::size_t grid_points = 0;  ///< grid points inside the region, counting all four quadrants
};

/// K values at every point of the grid {(i h, j h)} inside the (asymptotic) region, as an empirical CDF.
/// Only the X_r, Y_r >= 0 quadrant is evaluated; off-axis points stand in for their mirror images.
/// For expected mode the distribution kind must match the constraint.
CdfResult cdf_simulation(const RegionSpec& spec, double grid_step, const OrientationDistribution& dist,
                         CdfMethod method, const CdfOptions& options = {});

}  // namespace losdof
