#pragma once

// Coordinate systems for a linear source array / linear receiving array pair.
//
// Local coordinate system (LCS), centered at the receiver center o_r:
//   z  parallel to the source array,
//   x  in the plane through o_r and the source array, pointing away from it,
//   y  normal to that plane.
// The source array center sits at (-R sin(theta), 0, -R cos(theta)), so a source
// point at arc length q is s(q) = (-R sin(theta), 0, -R cos(theta) + q) and a
// receiver point at arc length l is p(l) = l * v.
//
// All lengths are in wavelengths. Spatial frequencies and bandwidths are
// therefore in cycles per wavelength; ArrayConfig converts back to SI units.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

#include "losdof/errors.hpp"

namespace losdof {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

class ArrayConfig {
 public:
  /// Lengths in wavelengths; the wavelength in meters is metadata for unit conversion.
  ArrayConfig(double source_length, double receiver_length, double wavelength = 1.0);

  double source_length() const noexcept { return source_length_; }
  double receiver_length() const noexcept { return receiver_length_; }
  double wavelength() const noexcept { return wavelength_; }

  double to_meters(double wavelengths) const noexcept { return wavelengths * wavelength_; }
  double to_per_meter(double per_wavelength) const noexcept { return per_wavelength / wavelength_; }

 private:
  double source_length_;
  double receiver_length_;
  double wavelength_;
};

/// Receiver center relative to the source array: radial distance and polar angle.
template <typename Scalar>
class BasicPlacement {
 public:
  BasicPlacement(Scalar radius, Scalar polar_angle) : radius_(radius), polar_angle_(polar_angle) {
    if (!(radius > Scalar(0))) throw DomainError("placement: radius must be positive");
    if (!(polar_angle > Scalar(0) && polar_angle < Scalar(std::numbers::pi)))
      throw DomainError("placement: polar angle must lie in (0, pi)");
  }

  Scalar radius() const noexcept { return radius_; }
  Scalar polar_angle() const noexcept { return polar_angle_; }

 private:
  Scalar radius_;
  Scalar polar_angle_;
};

/// Unit direction of the receiving array in the LCS, canonicalized to v_x >= 0.
template <typename Scalar>
class BasicOrientation {
 public:
  explicit BasicOrientation(const Vector3<Scalar>& direction) : direction_(direction) {
    using std::abs;
    if (!(abs(direction_.norm() - Scalar(1)) <= Eigen::NumTraits<Scalar>::dummy_precision()))
      throw DomainError("orientation: direction must be a unit vector");
    if (direction_.x() < Scalar(0)) direction_ = -direction_;
  }

  static BasicOrientation normalized(const Vector3<Scalar>& direction) {
    const Scalar n = direction.norm();
    if (!(n > Scalar(0))) throw DomainError("orientation: zero direction");
    return BasicOrientation(Vector3<Scalar>(direction / n));
  }

  static BasicOrientation e_x() { return BasicOrientation(Vector3<Scalar>::UnitX()); }
  static BasicOrientation e_y() { return BasicOrientation(Vector3<Scalar>::UnitY()); }
  static BasicOrientation e_z() { return BasicOrientation(Vector3<Scalar>::UnitZ()); }

  const Vector3<Scalar>& direction() const noexcept { return direction_; }
  Scalar x() const noexcept { return direction_.x(); }
  Scalar y() const noexcept { return direction_.y(); }
  Scalar z() const noexcept { return direction_.z(); }

 private:
  Vector3<Scalar> direction_;
};

using Placement = BasicPlacement<double>;
using Orientation = BasicOrientation<double>;

/// Ground-plane scenario: source array parallel to the X axis at height Z_s above
/// the origin, receiver center at (X_r, Y_r, 0).
struct GroundScenario {
  double source_height;
  double x;
  double y;
};

struct GroundPlacement {
  Placement placement;
  double psi;  ///< angle between the ground plane and the plane through o_r and the source array
};

enum class Validity { valid, marginal, invalid };

/// Orientation freedom of the receiving array: free rotation in 3D, or confined to the ground plane.
enum class OrientationConstraint { three_d, two_d };

inline constexpr double kDefaultMinSeparation = 10.0;

/// Radiative-region check: valid iff R >= (L_r/2 + d_min) / sin(theta); marginal iff R >= d_min only.
Validity classify(const Placement& placement, const ArrayConfig& cfg,
                  double min_separation = kDefaultMinSeparation);

const char* to_string(Validity v) noexcept;

template <typename Scalar>
Vector3<Scalar> source_point(Scalar q, const BasicPlacement<Scalar>& placement, const ArrayConfig& cfg) {
  using std::abs, std::cos, std::sin;
  if (!(abs(q) <= Scalar(cfg.source_length() / 2)))
    throw DomainError("source_point: arc length outside the source array");
  const Scalar r = placement.radius();
  const Scalar t = placement.polar_angle();
  return Vector3<Scalar>(-r * sin(t), Scalar(0), -r * cos(t) + q);
}

template <typename Scalar>
Vector3<Scalar> receiver_point(Scalar l, const BasicOrientation<Scalar>& orientation, const ArrayConfig& cfg) {
  using std::abs;
  if (!(abs(l) <= Scalar(cfg.receiver_length() / 2)))
    throw DomainError("receiver_point: arc length outside the receiving array");
  return l * orientation.direction();
}

/// Spatial frequency (cycles per wavelength) of the wave from source point q seen at receiver point l.
template <typename Scalar>
Scalar spatial_frequency(Scalar l, Scalar q, const BasicPlacement<Scalar>& placement,
                         const BasicOrientation<Scalar>& orientation, const ArrayConfig& cfg) {
  const Vector3<Scalar> r = receiver_point(l, orientation, cfg) - source_point(q, placement, cfg);
  const Scalar n = r.norm();
  if (!(n > Scalar(0))) throw DomainError("spatial_frequency: receiver point lies on the source array");
  return r.dot(orientation.direction()) / n;
}

/// Unit vector in the x-z plane perpendicular to the center-to-center line.
template <typename Scalar>
Vector3<Scalar> projection_direction(Scalar theta) {
  using std::cos, std::sin;
  if (!(theta > Scalar(0) && theta < Scalar(std::numbers::pi)))
    throw DomainError("projection_direction: polar angle must lie in (0, pi)");
  return Vector3<Scalar>(-cos(theta), Scalar(0), sin(theta));
}

/// Rotation taking ground (GCS) coordinates to the LCS.
template <typename Scalar>
Matrix3<Scalar> gcs_to_lcs(Scalar psi) {
  using std::cos, std::sin;
  const Scalar c = cos(psi);
  const Scalar s = sin(psi);
  Matrix3<Scalar> q;
  q << Scalar(0), c, -s,
       Scalar(0), s, c,
       Scalar(1), Scalar(0), Scalar(0);
  return q;
}

/// Unit direction from zenith and azimuth angles in the GCS.
template <typename Scalar>
Vector3<Scalar> gcs_direction(Scalar zenith, Scalar azimuth) {
  using std::cos, std::sin;
  return Vector3<Scalar>(sin(zenith) * cos(azimuth), sin(zenith) * sin(azimuth), cos(zenith));
}

template <typename Scalar>
BasicOrientation<Scalar> lcs_from_gcs(const Vector3<Scalar>& direction_gcs, Scalar psi) {
  return BasicOrientation<Scalar>(Vector3<Scalar>(gcs_to_lcs(psi) * direction_gcs));
}

GroundPlacement placement_from_ground(const GroundScenario& scenario);

}  // namespace losdof
