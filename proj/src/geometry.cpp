#include "losdof/geometry.hpp"

#include <cmath>

namespace losdof {

ArrayConfig::ArrayConfig(double source_length, double receiver_length, double wavelength)
    : source_length_(source_length), receiver_length_(receiver_length), wavelength_(wavelength) {
  if (!(source_length > 0.0) || !(receiver_length > 0.0))
    throw DomainError("array config: lengths must be positive");
  if (!(wavelength > 0.0)) throw DomainError("array config: wavelength must be positive");
  if (source_length < receiver_length)
    throw DomainError("array config: the source array must be at least as long as the receiving array");
}

Validity classify(const Placement& placement, const ArrayConfig& cfg, double min_separation) {
  const double r = placement.radius();
  const double full_bound = (cfg.receiver_length() / 2 + min_separation) / std::sin(placement.polar_angle());
  if (r >= full_bound) return Validity::valid;
  if (r >= min_separation) return Validity::marginal;
  return Validity::invalid;
}

const char* to_string(Validity v) noexcept {
  switch (v) {
    case Validity::valid: return "valid";
    case Validity::marginal: return "marginal";
    case Validity::invalid: return "invalid";
  }
  return "?";
}

GroundPlacement placement_from_ground(const GroundScenario& s) {
  if (!(s.source_height > 0.0)) throw DomainError("ground scenario: source height must be positive");
  if (!(s.y >= 0.0)) throw DomainError("ground scenario: Y_r must be non-negative");
  const double r = std::sqrt(s.source_height * s.source_height + s.x * s.x + s.y * s.y);
  const double theta = std::acos(s.x / r);
  // atan2 keeps psi in [0, pi/2] and reproduces sin(psi) = Z_s / sqrt(Z_s^2 + Y_r^2).
  const double psi = std::atan2(s.source_height, s.y);
  return {Placement(r, theta), psi};
}

}  // namespace losdof
