#include "losdof/multiplexing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "losdof/numerics/extremum.hpp"
#include "losdof/numerics/root_finding.hpp"
#include "losdof/parallel.hpp"
#include "losdof/rng.hpp"

namespace losdof {
namespace {

constexpr double kPi = std::numbers::pi;

double far_scale(const Placement& placement, const ArrayConfig& cfg) {
  return cfg.source_length() * cfg.receiver_length() / placement.radius();
}

double ground_factor(double theta, double psi) {
  const double c = std::cos(theta);
  const double sp = std::sin(psi);
  return std::sqrt(std::max(0.0, 1.0 - c * c * sp * sp));
}

// The 3D-family region {sin(theta) L_s L_r / R >= T} written as X^2 = (G/2) rho - rho^2 with
// rho = sqrt(Z^2 + Y^2) and G = 2 L_s L_r / T.
double closed_form_x(double g, double z, double y) {
  const double rho = std::hypot(z, y);
  return std::sqrt(std::max(0.0, 0.5 * g * rho - rho * rho));
}

// G of the 3D-family region that equals (3D) or contains (2D) the requested region.
double enclosing_g(const RegionSpec& spec) {
  const double g0 = spec.g0();
  if (spec.constraint() == OrientationConstraint::three_d)
    return spec.mode() == MultiplexMode::expected ? g0 : 2.0 * g0;
  return spec.mode() == MultiplexMode::expected ? 4.0 / kPi * g0 : 2.0 * g0;
}

double max_abs_x(double g, double z) {
  const double rho = std::max(z, 0.25 * g);
  return std::sqrt(std::max(0.0, 0.5 * g * rho - rho * rho));
}

}  // namespace

RegionSpec::RegionSpec(ArrayConfig cfg, double source_height, double k0, OrientationConstraint constraint,
                       MultiplexMode mode)
    : cfg_(cfg), source_height_(source_height), k0_(k0), constraint_(constraint), mode_(mode) {
  if (!(k0 > 0.0)) throw DomainError("region: K_0 must be positive");
  if (!(source_height > cfg.source_length() / 2))
    throw DomainError("region: source height must exceed L_s/2");
}

double RegionSpec::max_radius() const noexcept {
  const double g0 = this->g0();
  if (mode_ == MultiplexMode::max) return g0;
  return constraint_ == OrientationConstraint::three_d ? 0.5 * g0 : 2.0 / kPi * g0;
}

double k_approx(const Placement& placement, const Orientation& orientation, const ArrayConfig& cfg) {
  const double t = placement.polar_angle();
  const double s = std::sin(t);
  return std::abs(orientation.x() * std::cos(t) - orientation.z() * s) * s * far_scale(placement, cfg);
}

OptimalOrientation k_max_3d(const Placement& placement, const ArrayConfig& cfg) {
  const double t = placement.polar_angle();
  const Vector3<double> u = projection_direction(t);
  const double c = std::cos(t);
  const Vector3<double> v = c > 0.0 ? Vector3<double>(-u) : u;
  return {std::sin(t) * far_scale(placement, cfg), Orientation(v)};
}

double k_max_2d(const Placement& placement, double psi, const ArrayConfig& cfg) {
  return ground_factor(placement.polar_angle(), psi) * k_max_3d(placement, cfg).k;
}

double k_exp_3d(const Placement& placement, const ArrayConfig& cfg) { return 0.5 * k_max_3d(placement, cfg).k; }

double k_exp_2d(const Placement& placement, double psi, const ArrayConfig& cfg) {
  return 2.0 / kPi * k_max_2d(placement, psi, cfg);
}

double region_k(const RegionSpec& spec, double x, double y) {
  const GroundPlacement g = placement_from_ground({spec.source_height(), x, y});
  const ArrayConfig& cfg = spec.config();
  if (spec.constraint() == OrientationConstraint::three_d)
    return spec.mode() == MultiplexMode::max ? k_max_3d(g.placement, cfg).k : k_exp_3d(g.placement, cfg);
  return spec.mode() == MultiplexMode::max ? k_max_2d(g.placement, g.psi, cfg) : k_exp_2d(g.placement, g.psi, cfg);
}

bool region_membership(const RegionSpec& spec, double x, double y) {
  // At Z_s = max_radius only the point under the source reaches K_0; the region counts as empty.
  if (!(spec.source_height() < spec.max_radius())) return false;
  return region_k(spec, x, y) >= spec.k0();
}

double region_boundary_x(const RegionSpec& spec, double y) {
  const double z = spec.source_height();
  const double r_max = spec.max_radius();
  if (!(z < r_max)) throw DomainError("region_boundary_x: region is empty");
  if (std::hypot(z, y) >= r_max) return 0.0;
  const double x_upper = closed_form_x(enclosing_g(spec), z, y);
  if (spec.constraint() == OrientationConstraint::three_d) return x_upper;

  // K decreases in |X_r| at fixed Y_r; the 3D-family bound is a superset.
  auto f = [&](double x) { return region_k(spec, x, y) - spec.k0(); };
  if (f(x_upper) >= 0.0) return x_upper;
  if (f(0.0) <= 0.0) return 0.0;
  return numerics::bisect(f, 0.0, x_upper, 0.0);
}

RegionBoundary region_boundary(const RegionSpec& spec, std::size_t n_points) {
  if (n_points < 2) throw DomainError("region_boundary: need at least two points");
  RegionBoundary out;
  const double z = spec.source_height();
  const double r_max = spec.max_radius();
  if (!(z < r_max)) return out;
  out.nonempty = true;
  out.y_max = std::sqrt((r_max - z) * (r_max + z));
  out.points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    // Sine spacing puts more samples where the curve turns steeply toward Y_r max.
    const double t = static_cast<double>(i) / static_cast<double>(n_points - 1);
    const double y = i + 1 == n_points ? out.y_max : out.y_max * std::sin(0.5 * kPi * t);
    out.points.emplace_back(i + 1 == n_points ? 0.0 : region_boundary_x(spec, y), y);
  }
  return out;
}

Vector3<double> sample_gcs_direction(const OrientationDistribution& dist, std::uint64_t index) {
  const double gamma = 2.0 * kPi * rng::uniform(dist.seed, dist.stream, 2 * index);
  if (dist.kind == DistributionKind::uni2d) return Vector3<double>(std::cos(gamma), std::sin(gamma), 0.0);
  const double cos_phi = 1.0 - 2.0 * rng::uniform(dist.seed, dist.stream, 2 * index + 1);
  const double sin_phi = std::sqrt(std::max(0.0, 1.0 - cos_phi * cos_phi));
  return Vector3<double>(sin_phi * std::cos(gamma), sin_phi * std::sin(gamma), cos_phi);
}

Orientation sample_orientation(const OrientationDistribution& dist, double psi, std::uint64_t index) {
  return lcs_from_gcs(sample_gcs_direction(dist, index), psi);
}

OptimalOrientation optimal_orientation_search(const Placement& placement, double psi, OrientationConstraint constraint,
                                              const ArrayConfig& cfg, const SearchOptions& options) {
  if (options.grid_n < 64) throw DomainError("optimal_orientation_search: grid_n must be at least 64");
  const bool planar = constraint == OrientationConstraint::two_d;
  auto objective = [&](double phi, double gamma) {
    return k_number(placement, lcs_from_gcs(gcs_direction(phi, gamma), psi), cfg, options.k_options);
  };

  // v and -v give the same K: the upper hemisphere (or a half circle in the ground plane) suffices.
  const std::size_t n_phi = planar ? 1 : options.grid_n;
  const std::size_t n_gamma = 2 * options.grid_n;
  const double d_phi = planar ? 0.0 : 0.5 * kPi / static_cast<double>(n_phi - 1);
  const double d_gamma = (planar ? kPi : 2.0 * kPi) / static_cast<double>(n_gamma);
  double best_phi = 0.5 * kPi;
  double best_gamma = 0.0;
  double best_k = -1.0;
  for (std::size_t i = 0; i < n_phi; ++i) {
    const double phi = planar ? 0.5 * kPi : d_phi * static_cast<double>(i);
    for (std::size_t j = 0; j < n_gamma; ++j) {
      const double gamma = d_gamma * static_cast<double>(j);
      const double k = objective(phi, gamma);
      if (k > best_k) {
        best_k = k;
        best_phi = phi;
        best_gamma = gamma;
      }
    }
  }

  constexpr double x_tol = 1e-7;
  for (int pass = 0; pass < options.refinement_passes; ++pass) {
    auto along_gamma = [&](double g) { return objective(best_phi, g); };
    numerics::Extremum e = numerics::golden_section_maximize(along_gamma, best_gamma - d_gamma, best_gamma + d_gamma,
                                                             x_tol, {best_gamma, best_k});
    best_gamma = e.x;
    best_k = e.value;
    if (planar) continue;
    auto along_phi = [&](double p) { return objective(p, best_gamma); };
    e = numerics::golden_section_maximize(along_phi, std::max(0.0, best_phi - d_phi), std::min(kPi, best_phi + d_phi),
                                          x_tol, {best_phi, best_k});
    best_phi = e.x;
    best_k = e.value;
  }
  return {best_k, lcs_from_gcs(gcs_direction(best_phi, best_gamma), psi)};
}

CdfResult cdf_simulation(const RegionSpec& spec, double grid_step, const OrientationDistribution& dist,
                         CdfMethod method, const CdfOptions& options) {
  if (!(grid_step > 0.0)) throw DomainError("cdf_simulation: grid step must be positive");
  if (spec.mode() == MultiplexMode::expected) {
    const bool matches = (dist.kind == DistributionKind::uni3d) == (spec.constraint() == OrientationConstraint::three_d);
    if (!matches) throw DomainError("cdf_simulation: orientation distribution does not match the constraint");
  }
  if (method == CdfMethod::exact && spec.mode() == MultiplexMode::expected && options.expectation_draws == 0)
    throw DomainError("cdf_simulation: need at least one orientation draw");

  CdfResult out;
  const double z = spec.source_height();
  if (!(z < spec.max_radius())) return out;

  struct GridPoint {
    std::size_t i;
    std::size_t j;
  };
  std::vector<GridPoint> inside;
  const double g = enclosing_g(spec);
  const auto ni = static_cast<std::size_t>(std::floor(max_abs_x(g, z) / grid_step));
  const auto nj = static_cast<std::size_t>(
      std::floor(std::sqrt((spec.max_radius() - z) * (spec.max_radius() + z)) / grid_step));
  for (std::size_t i = 0; i <= ni; ++i)
    for (std::size_t j = 0; j <= nj; ++j)
      if (region_membership(spec, grid_step * static_cast<double>(i), grid_step * static_cast<double>(j)))
        inside.push_back({i, j});
  if (inside.empty()) return out;

  std::vector<double> k(inside.size());
  const ArrayConfig& cfg = spec.config();
  parallel_for(inside.size(), options.threads, [&](std::size_t n) {
    const double x = grid_step * static_cast<double>(inside[n].i);
    const double y = grid_step * static_cast<double>(inside[n].j);
    if (method == CdfMethod::asymptotic) {
      k[n] = region_k(spec, x, y);
      return;
    }
    const GroundPlacement gp = placement_from_ground({z, x, y});
    if (spec.mode() == MultiplexMode::max) {
      k[n] = optimal_orientation_search(gp.placement, gp.psi, spec.constraint(), cfg, options.search).k;
      return;
    }
    // Each grid point owns the stream keyed by its indices.
    OrientationDistribution local = dist;
    local.stream = (static_cast<std::uint64_t>(inside[n].i) << 32) | static_cast<std::uint64_t>(inside[n].j);
    double sum = 0.0;
    for (std::size_t d = 0; d < options.expectation_draws; ++d)
      sum += k_number(gp.placement, sample_orientation(local, gp.psi, d), cfg, options.search.k_options);
    k[n] = sum / static_cast<double>(options.expectation_draws);
  });

  std::vector<double> samples;
  samples.reserve(4 * inside.size());
  for (std::size_t n = 0; n < inside.size(); ++n) {
    const std::size_t copies = (inside[n].i > 0 ? 2 : 1) * (inside[n].j > 0 ? 2 : 1);
    samples.insert(samples.end(), copies, k[n]);
  }
  out.grid_points = samples.size();
  out.cdf = make_ecdf(std::move(samples));
  out.empty = false;
  return out;
}

}  // namespace losdof
