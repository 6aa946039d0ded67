#pragma once

// Counter-based random numbers: every draw is a pure function of (seed, stream, index),
// so results do not depend on thread scheduling or platform.
//
// bits(seed, stream, index) = mix(mix(seed + G*(stream + 1)) + G*(index + 1)),
// with mix the SplitMix64 finalizer and G = 0x9E3779B97F4A7C15. Uniform doubles in
// [0, 1) take the top 53 bits.

#include <cstdint>

namespace losdof::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  return mix(mix(seed + kGolden * (stream + 1)) + kGolden * (index + 1));
}

constexpr double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  return static_cast<double>(bits(seed, stream, index) >> 11) * 0x1.0p-53;
}

}  // namespace losdof::rng
