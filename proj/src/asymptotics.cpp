#include "losdof/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "losdof/numerics/root_finding.hpp"

namespace losdof {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTolerance = 1e-10;

void require_angle(double theta, const char* who) {
  if (!(theta > 0.0 && theta < kPi)) throw DomainError(std::string(who) + ": polar angle must lie in (0, pi)");
}

double fold(double theta) { return theta > kPi / 2 ? kPi - theta : theta; }

// Shared quantities for a folded angle t in (0, pi/2]. c = cos(t) >= 0.
struct AngleTerms {
  double s;
  double c;
  double eta;
  double one_minus_eta2;  // 4c^2 / (1 + 3c^2)
  double one_minus_eta;
  double log_2c;
  double log1p_3c2;
  double log1p_mc2;  // log(sin^2)
};

AngleTerms terms(double t) {
  AngleTerms a{};
  a.s = std::sin(t);
  a.c = std::cos(t);
  const double c2 = a.c * a.c;
  a.eta = a.s / std::sqrt(1.0 + 3.0 * c2);
  a.one_minus_eta2 = 4.0 * c2 / (1.0 + 3.0 * c2);
  a.one_minus_eta = a.one_minus_eta2 / (1.0 + a.eta);
  a.log_2c = std::log(2.0 * a.c);
  a.log1p_3c2 = std::log1p(3.0 * c2);
  a.log1p_mc2 = std::log1p(-c2);
  return a;
}

double sbe_z2_minus_one(const AngleTerms& a) {
  return 0.5 * a.one_minus_eta2 * (a.one_minus_eta - a.eta * a.eta) / (a.eta * (1.0 + a.eta));
}

double sbe_x2_minus_one(const AngleTerms& a) { return -0.5 * a.one_minus_eta * (a.eta + 2.0); }

// Near the array axis B grows without bound and A underflows, so the segment keeps log(A).
AsymptoteSegment medium_segment(double log_a, double b) {
  AsymptoteSegment seg{SegmentKind::medium, std::exp(log_a), b};
  seg.log_amplitude_override = log_a;
  return seg;
}

// Logs of the segment-2 amplitudes.
double log_amplitude_z2(const AngleTerms& a, double b) { return (1.0 - b) * a.log_2c - 0.5 * a.log1p_3c2; }
double log_amplitude_x2(const AngleTerms& a, double b) { return (2.0 - b) * a.log_2c - a.log1p_3c2 - std::log1p(a.eta); }

double log_z12(const AngleTerms& a) {
  const double b = 1.0 + sbe_z2_minus_one(a);
  return (log_amplitude_z2(a, b) - std::numbers::ln2) / b;
}

double log_z23(const AngleTerms& a) {
  return -a.log_2c + (-0.5 * a.log1p_3c2 - a.log1p_mc2) / sbe_z2_minus_one(a);
}

double log_x12(const AngleTerms& a) {
  const double b = 1.0 + sbe_x2_minus_one(a);
  return log_amplitude_x2(a, b) / b;
}

double log_x23(const AngleTerms& a) {
  const double num = -std::log1p(-0.5 * a.one_minus_eta) - a.log1p_3c2 - 0.5 * a.log1p_mc2;
  return -a.log_2c + num / sbe_x2_minus_one(a);
}

double log_x13(const AngleTerms& a) { return 0.5 * a.log1p_mc2 + std::log(a.c); }

// ln R_z12 - ln R_z13 with the common ln(1/2) removed analytically, so it keeps its sign up to pi/2.
double z_crossing_gap(double t) {
  const AngleTerms a = terms(t);
  const double bm1 = sbe_z2_minus_one(a);
  const double b = 1.0 + bm1;
  return (log_amplitude_z2(a, b) + bm1 * std::numbers::ln2) / b - a.log1p_mc2;
}

double x_crossing_gap(double t) {
  const AngleTerms a = terms(t);
  return log_x12(a) - log_x13(a);
}

CriticalAngles compute_critical_angles() {
  CriticalAngles out{};
  out.z1 = std::acos(std::sqrt(1.0 / (2.0 * std::sqrt(5.0) - 1.0)));
  out.z2 = numerics::bisect(z_crossing_gap, out.z1, kPi / 2, kAngleTolerance);
  out.x = numerics::bisect(x_crossing_gap, 1e-6, kPi / 4, kAngleTolerance);
  return out;
}

void link(PiecewiseBandwidthModel& model) {
  for (std::size_t i = 0; i < model.segments.size(); ++i) {
    model.segments[i].valid_from = i == 0 ? 0.0 : model.breakpoints[i - 1];
    model.segments[i].valid_to =
        i + 1 < model.segments.size() ? model.breakpoints[i] : std::numeric_limits<double>::infinity();
  }
}

PiecewiseBandwidthModel make_model(ModelFamily family, double theta, const ArrayConfig& cfg) {
  PiecewiseBandwidthModel m{family, theta, cfg.source_length(), std::nullopt, {}, {}};
  return m;
}

}  // namespace

double AsymptoteSegment::log_amplitude() const {
  return std::isnan(log_amplitude_override) ? std::log(amplitude) : log_amplitude_override;
}

double AsymptoteSegment::value(double radius, double source_length) const {
  if (exponent == 0.0) return amplitude;
  if (std::isnan(log_amplitude_override)) return amplitude * std::pow(source_length / radius, exponent);
  return std::exp(log_amplitude_override + exponent * std::log(source_length / radius));
}

double eta(double theta) {
  require_angle(theta, "eta");
  const double c = std::cos(theta);
  return std::sin(theta) / std::sqrt(1.0 + 3.0 * c * c);
}

double sbe_z2(double theta) {
  const double e = eta(theta);
  return 0.5 * (e * e + 1.0 / e);
}

double sbe_x2(double theta) {
  const double e = eta(theta);
  return 0.5 * (e * e + e);
}

double intersect(const AsymptoteSegment& a, const AsymptoteSegment& b, const ArrayConfig& cfg) {
  if (a.exponent == b.exponent) throw ParallelSegmentsError("intersect: segments have equal exponents");
  return cfg.source_length() * std::exp((a.log_amplitude() - b.log_amplitude()) / (a.exponent - b.exponent));
}

const CriticalAngles& critical_angles() {
  static const CriticalAngles cached = compute_critical_angles();
  return cached;
}

double critical_angle_z1() { return critical_angles().z1; }
double critical_angle_z2() { return critical_angles().z2; }
double critical_angle_x() { return critical_angles().x; }

double critical_angle_z2_residual(double theta) {
  require_angle(theta, "critical_angle_z2_residual");
  const double e = eta(theta);
  const double s = std::sin(theta);
  const double c = std::abs(std::cos(theta));
  return 0.5 * std::sqrt(1.0 - e * e) - std::pow(s * s * c, sbe_z2(theta));
}

double critical_angle_x_residual(double theta) {
  require_angle(theta, "critical_angle_x_residual");
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return 1.0 - eta(theta) - std::pow(2.0 * s * c * c, sbe_x2(theta));
}

double critical_distance_z12(double theta) {
  require_angle(theta, "critical_distance_z12");
  return std::exp(log_z12(terms(fold(theta))));
}

double critical_distance_z23(double theta) {
  require_angle(theta, "critical_distance_z23");
  return std::exp(log_z23(terms(fold(theta))));
}

double critical_distance_z13(double theta) {
  require_angle(theta, "critical_distance_z13");
  const double s = std::sin(theta);
  return 0.5 * s * s;
}

double critical_distance_x12(double theta) {
  require_angle(theta, "critical_distance_x12");
  return std::exp(log_x12(terms(fold(theta))));
}

double critical_distance_x23(double theta) {
  require_angle(theta, "critical_distance_x23");
  return std::exp(log_x23(terms(fold(theta))));
}

double critical_distance_x13(double theta) {
  require_angle(theta, "critical_distance_x13");
  return std::sin(theta) * std::abs(std::cos(theta));
}

double critical_distance_x13_broadside() { return 1.0 / std::sqrt(8.0); }

double critical_distance_general(double theta, const Orientation& orientation) {
  require_angle(theta, "critical_distance_general");
  const double vx = orientation.x();
  const double vz = orientation.z();
  if (std::abs(vx) <= 1e-9 && std::abs(vz) <= 1e-9)
    throw DegenerateOrientationError("critical_distance_general: orientation is e_y");
  const double s = std::sin(theta);
  const double a1 = std::hypot(vx, vz) + std::abs(vz);
  const double a2 = std::abs(vx * std::cos(theta) - vz * s) * s;
  return a2 / a1;
}

PiecewiseBandwidthModel build_model_z(double theta, const ArrayConfig& cfg, const ModelOptions& options) {
  require_angle(theta, "build_model_z");
  const double t = fold(theta);
  const double ls = cfg.source_length();
  const CriticalAngles& ca = critical_angles();
  const AngleTerms a = terms(t);
  PiecewiseBandwidthModel m = make_model(ModelFamily::z, theta, cfg);

  const AsymptoteSegment flat{SegmentKind::flat, 2.0, 0.0};
  const AsymptoteSegment far{SegmentKind::far, a.s * a.s, 1.0};
  const bool broadside = std::abs(t - kPi / 2) <= options.broadside_band;
  const bool dual = options.formation == Formation::dual_slope || broadside || (t >= ca.z1 && t <= ca.z2);

  if (!dual) {
    const double b = 1.0 + sbe_z2_minus_one(a);
    const AsymptoteSegment medium = medium_segment(log_amplitude_z2(a, b), b);
    // Crossings of the segments as stored, so the model is continuous to rounding even for steep SBEs.
    const double r12 = intersect(flat, medium, cfg);
    const double r23 = intersect(medium, far, cfg);
    if (std::isfinite(r12) && r12 > 0.0) {
      m.segments = {flat, medium};
      m.breakpoints = {r12};
      // Just below theta_z1 the SBE tends to 1 and R_z23 overflows; segment 3 then never activates.
      if (std::isfinite(r23) && r23 > r12) {
        m.segments.push_back(far);
        m.breakpoints.push_back(r23);
      }
      link(m);
      return m;
    }
  }
  m.segments = {flat, far};
  m.breakpoints = {0.5 * ls * a.s * a.s};
  link(m);
  return m;
}

PiecewiseBandwidthModel build_model_x(double theta, const ArrayConfig& cfg, const ModelOptions& options) {
  require_angle(theta, "build_model_x");
  const double t = fold(theta);
  const double ls = cfg.source_length();
  const AngleTerms a = terms(t);
  PiecewiseBandwidthModel m = make_model(ModelFamily::x, theta, cfg);

  const AsymptoteSegment flat{SegmentKind::flat, 1.0, 0.0};
  if (std::abs(t - kPi / 2) <= options.broadside_band) {
    m.segments = {flat, {SegmentKind::far_broadside, 0.125, 2.0}};
    m.breakpoints = {ls * critical_distance_x13_broadside()};
    link(m);
    return m;
  }

  const AsymptoteSegment far{SegmentKind::far, a.s * a.c, 1.0};
  if (options.formation == Formation::dual_slope || t <= critical_angles().x) {
    m.segments = {flat, far};
    m.breakpoints = {ls * a.s * a.c};
    link(m);
    return m;
  }

  const double b = 1.0 + sbe_x2_minus_one(a);
  const AsymptoteSegment medium = medium_segment(log_amplitude_x2(a, b), b);
  m.segments = {flat, medium, far};
  m.breakpoints = {intersect(flat, medium, cfg), intersect(medium, far, cfg)};
  link(m);
  return m;
}

PiecewiseBandwidthModel build_model_general(double theta, const Orientation& orientation, const ArrayConfig& cfg) {
  require_angle(theta, "build_model_general");
  const double vx = orientation.x();
  const double vz = orientation.z();
  if (std::abs(vx) <= 1e-9 && std::abs(vz) <= 1e-9)
    throw DegenerateOrientationError("build_model_general: orientation is e_y");
  const double s = std::sin(theta);
  const double a1 = std::hypot(vx, vz) + std::abs(vz);
  const double a2 = std::abs(vx * std::cos(theta) - vz * s) * s;

  PiecewiseBandwidthModel m = make_model(ModelFamily::general, theta, cfg);
  m.orientation = orientation;
  m.segments = {{SegmentKind::flat, a1, 0.0}, {SegmentKind::far, a2, 1.0}};
  m.breakpoints = {cfg.source_length() * a2 / a1};
  link(m);
  return m;
}

std::size_t active_segment(const PiecewiseBandwidthModel& model, double radius) {
  if (!(radius > 0.0)) throw DomainError("eval_model: radius must be positive");
  std::size_t i = 0;
  while (i < model.breakpoints.size() && radius > model.breakpoints[i]) ++i;
  return i;
}

double eval_model(const PiecewiseBandwidthModel& model, double radius) {
  return model.segments[active_segment(model, radius)].value(radius, model.source_length);
}

double orientation_strategy_threshold(double theta, double psi, OrientationConstraint constraint,
                                      const ArrayConfig& cfg) {
  require_angle(theta, "orientation_strategy_threshold");
  const double base = 0.5 * cfg.source_length() * std::sin(theta);
  if (constraint == OrientationConstraint::three_d) return base;
  const double c = std::cos(theta);
  const double sp = std::sin(psi);
  return std::sqrt(1.0 - c * c * sp * sp) * base;
}

}  // namespace losdof
