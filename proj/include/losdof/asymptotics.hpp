#pragma once

// Multi-slope asymptotic models of the center bandwidth W(R; theta) = w(0).
//
// Every segment is a power law A * (L_s / R)^B in cycles per wavelength. Segment
// kinds follow the usual numbering: flat (1), medium (2), far (3) and the
// broadside far segment (3*) of the e_x orientation at theta = pi/2.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "losdof/geometry.hpp"

namespace losdof {

enum class SegmentKind { flat, medium, far, far_broadside };

struct AsymptoteSegment {
  SegmentKind kind;
  double amplitude;  ///< A, cycles per wavelength
  double exponent;   ///< B, the spatial bandwidth exponent
  double valid_from = 0.0;
  double valid_to = std::numeric_limits<double>::infinity();
  /// log(A) for segments built from their logarithm (A underflows for steep medium segments); NaN otherwise.
  double log_amplitude_override = std::numeric_limits<double>::quiet_NaN();

  double log_amplitude() const;
  double value(double radius, double source_length) const;
};

enum class ModelFamily { z, x, general };

/// Segment set used for the e_z / e_x families: the full formation rules, or segments 1 and 3
/// (3* at broadside) over the whole angle range.
enum class Formation { multi_slope, dual_slope };

struct PiecewiseBandwidthModel {
  ModelFamily family;
  double theta;
  double source_length;
  std::optional<Orientation> orientation;  ///< set for the general family
  std::vector<AsymptoteSegment> segments;
  std::vector<double> breakpoints;  ///< segments.size() - 1 increasing critical distances
};

struct ModelOptions {
  Formation formation = Formation::multi_slope;
  /// Angles within this distance of pi/2 use the broadside rule.
  double broadside_band = 1e-9;
};

double eta(double theta);
double sbe_z2(double theta);
double sbe_x2(double theta);

/// Radius where two power-law segments cross. Throws ParallelSegmentsError for equal exponents.
double intersect(const AsymptoteSegment& a, const AsymptoteSegment& b, const ArrayConfig& cfg);

struct CriticalAngles {
  double z1;
  double z2;
  double x;
};

/// Computed once per process; thread-safe.
const CriticalAngles& critical_angles();
double critical_angle_z1();
double critical_angle_z2();
double critical_angle_x();

/// sqrt(1 - eta^2)/2 - (sin^2 cos)^B_z2: zero where R_z12 and R_z13 coincide.
double critical_angle_z2_residual(double theta);
/// 1 - eta - (2 sin cos^2)^B_x2: zero where R_x12 and R_x13 coincide.
double critical_angle_x_residual(double theta);

// Critical distances divided by L_s, for theta in (0, pi); symmetric about pi/2.
double critical_distance_z12(double theta);
double critical_distance_z23(double theta);
double critical_distance_z13(double theta);
double critical_distance_x12(double theta);
double critical_distance_x23(double theta);
double critical_distance_x13(double theta);
double critical_distance_x13_broadside();
/// Crossing of the two general-orientation segments (R_v / L_s); never above 1/2.
double critical_distance_general(double theta, const Orientation& orientation);

PiecewiseBandwidthModel build_model_z(double theta, const ArrayConfig& cfg, const ModelOptions& options = {});
PiecewiseBandwidthModel build_model_x(double theta, const ArrayConfig& cfg, const ModelOptions& options = {});
/// Dual-slope model for any orientation except e_y (DegenerateOrientationError).
PiecewiseBandwidthModel build_model_general(double theta, const Orientation& orientation, const ArrayConfig& cfg);

/// Zero-based index of the segment active at R (segment i covers (breakpoint[i-1], breakpoint[i]]).
std::size_t active_segment(const PiecewiseBandwidthModel& model, double radius);
double eval_model(const PiecewiseBandwidthModel& model, double radius);

/// Distance below which the receiver should simply be aligned with the source array.
double orientation_strategy_threshold(double theta, double psi, OrientationConstraint constraint,
                                      const ArrayConfig& cfg);

}  // namespace losdof
