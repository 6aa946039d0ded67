#include "losdof/exact_bandwidth.hpp"

#include <array>
#include <cmath>
#include <string>

#include "losdof/numerics/extremum.hpp"
#include "losdof/numerics/quadrature.hpp"

namespace losdof {
namespace {

void require_not_invalid(const Placement& placement, const ArrayConfig& cfg, const char* who) {
  if (classify(placement, cfg) == Validity::invalid)
    throw DomainError(std::string(who) + ": placement is too close to the source array");
}

void require_on_receiver(double l, const ArrayConfig& cfg, const char* who) {
  if (!(std::abs(l) <= cfg.receiver_length() / 2))
    throw DomainError(std::string(who) + ": arc length outside the receiving array");
}

// t/sqrt(t^2 + h^2)
double direction_cosine(double t, double h) { return t / std::hypot(t, h); }

// t1/g1 - t2/g2 with g = sqrt(t^2 + h^2), free of cancellation when t1 and t2 share a sign.
double direction_cosine_gap(double t1, double t2, double h) {
  const double g1 = std::hypot(t1, h);
  const double g2 = std::hypot(t2, h);
  if ((t1 > 0.0 && t2 > 0.0) || (t1 < 0.0 && t2 < 0.0))
    return h * h * (t1 - t2) * (t1 + t2) / (g1 * g2 * (t1 * g2 + t2 * g1));
  return t1 / g1 - t2 / g2;
}

// r(q) = a(l) - q e_z with a(l) = l v - s(0). Along the source array kappa(u) = (c0 + v_z u)/sqrt(rho^2 + u^2),
// u = a_z - q, whose derivative vanishes only at u = v_z rho^2 / c0.
class StationaryKernel {
 public:
  StationaryKernel(const Placement& placement, const Orientation& orientation, const ArrayConfig& cfg)
      : v_(orientation.direction()),
        center_(source_point(0.0, placement, cfg)),
        half_(cfg.source_length() / 2) {}

  BandwidthSample operator()(double l) const {
    const Vector3<double> a = l * v_ - center_;
    const double rho2 = a.x() * a.x() + a.y() * a.y();
    const double c0 = a.x() * v_.x() + a.y() * v_.y();
    auto kappa = [&](double q) {
      const double u = a.z() - q;
      const double n = std::sqrt(rho2 + u * u);
      if (!(n > 0.0)) throw DomainError("local_bandwidth_stationary: receiver point lies on the source array");
      return (c0 + v_.z() * u) / n;
    };

    std::array<double, 3> qs{-half_, half_, 0.0};
    std::size_t count = 2;
    if (c0 != 0.0) {
      const double q_star = a.z() - v_.z() * rho2 / c0;
      if (q_star > -half_ && q_star < half_) {
        qs = {-half_, q_star, half_};
        count = 3;
      }
    }

    BandwidthSample out{};
    out.l = l;
    for (std::size_t i = 0; i < count; ++i) {
      const double k = kappa(qs[i]);
      if (i == 0 || k > out.kappa_max) {
        out.kappa_max = k;
        out.q_max = qs[i];
      }
      if (i == 0 || k < out.kappa_min) {
        out.kappa_min = k;
        out.q_min = qs[i];
      }
    }
    out.w = out.kappa_max - out.kappa_min;
    return out;
  }

 private:
  Vector3<double> v_;
  Vector3<double> center_;
  double half_;
};

}  // namespace

BandwidthSample local_bandwidth_z(double l, const Placement& placement, const ArrayConfig& cfg) {
  require_not_invalid(placement, cfg, "local_bandwidth_z");
  require_on_receiver(l, cfg, "local_bandwidth_z");
  const double r = placement.radius();
  const double half = cfg.source_length() / 2;
  const double along = l + r * std::cos(placement.polar_angle());
  const double across = r * std::sin(placement.polar_angle());
  BandwidthSample out{};
  out.l = l;
  out.kappa_max = direction_cosine(along + half, across);
  out.kappa_min = direction_cosine(along - half, across);
  out.q_max = -half;
  out.q_min = half;
  out.w = direction_cosine_gap(along + half, along - half, across);
  return out;
}

BandwidthSample local_bandwidth_x(double l, const Placement& placement, const ArrayConfig& cfg) {
  require_not_invalid(placement, cfg, "local_bandwidth_x");
  require_on_receiver(l, cfg, "local_bandwidth_x");
  const double r = placement.radius();
  const double half = cfg.source_length() / 2;
  const double c = std::cos(placement.polar_angle());
  const double h = l + r * std::sin(placement.polar_angle());
  if (!(h > 0.0)) throw DomainError("local_bandwidth_x: receiver point does not face the source array");
  const double offset = r * std::abs(c);  // distance along z from the foot of the perpendicular to the center
  const double far = offset + half;
  const double g_far = std::hypot(h, far);
  const double far_sign = c > 0.0 ? -1.0 : 1.0;  // far endpoint lies opposite to R cos(theta)

  BandwidthSample out{};
  out.l = l;
  out.kappa_min = h / g_far;
  out.q_min = c == 0.0 ? -half : far_sign * half;
  if (offset <= half) {
    out.kappa_max = 1.0;
    out.q_max = r * c;
    out.w = far * far / (g_far * (g_far + h));
  } else {
    const double near = offset - half;
    const double g_near = std::hypot(h, near);
    out.kappa_max = h / g_near;
    out.q_max = -far_sign * half;
    out.w = h * (2.0 * offset * cfg.source_length()) / (g_near * g_far * (g_near + g_far));
  }
  return out;
}

BandwidthSample local_bandwidth_general(double l, const Placement& placement, const Orientation& orientation,
                                        const ArrayConfig& cfg, const GridSearchOptions& options) {
  require_not_invalid(placement, cfg, "local_bandwidth_general");
  require_on_receiver(l, cfg, "local_bandwidth_general");
  const double half = cfg.source_length() / 2;
  auto kappa = [&](double q) { return spatial_frequency(l, q, placement, orientation, cfg); };
  const numerics::Extrema ext =
      numerics::grid_extrema(kappa, -half, half, options.grid_points, options.relative_x_tolerance);
  return {l, ext.max.value - ext.min.value, ext.max.value, ext.min.value, ext.max.x, ext.min.x};
}

BandwidthSample local_bandwidth_stationary(double l, const Placement& placement, const Orientation& orientation,
                                           const ArrayConfig& cfg) {
  require_not_invalid(placement, cfg, "local_bandwidth_stationary");
  require_on_receiver(l, cfg, "local_bandwidth_stationary");
  return StationaryKernel(placement, orientation, cfg)(l);
}

double k_number(const Placement& placement, const Orientation& orientation, const ArrayConfig& cfg,
                const KNumberOptions& options) {
  if (classify(placement, cfg) != Validity::valid)
    throw DomainError("k_number: placement must be in the valid radiative region");
  const double half = cfg.receiver_length() / 2;
  const StationaryKernel kernel(placement, orientation, cfg);
  auto integrand = [&](double l) {
    if (options.method == ExtremumMethod::grid_search)
      return local_bandwidth_general(l, placement, orientation, cfg, options.grid).w;
    return kernel(l).w;
  };
  numerics::QuadratureOptions q;
  q.rel_tol = options.rel_tol;
  // K never exceeds 2 L_r; an identically vanishing integrand converges on this floor.
  q.abs_tol = 1e-14 * cfg.receiver_length();
  q.max_evaluations = options.max_evaluations;
  const numerics::QuadratureResult res = numerics::integrate_adaptive(integrand, -half, half, q);
  if (!res.converged) throw ComputationError("k_number: quadrature did not converge", res.value);
  return res.value < 0.0 ? 0.0 : res.value;
}

double k_number_const(double bandwidth, const ArrayConfig& cfg) {
  if (!(bandwidth >= 0.0)) throw DomainError("k_number_const: bandwidth must be non-negative");
  return bandwidth * cfg.receiver_length();
}

}  // namespace losdof
