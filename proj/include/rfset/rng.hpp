#pragma once

#include <cstdint>

namespace rfset {

// Counter-based deterministic random numbers: the value at (seed, stream,
// index) never depends on call order, so partitioned and sequential runs
// draw identical variates.

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t index) {
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = mix64(seed + kGolden);
  h = mix64(h ^ (stream * kGolden + 1));
  h = mix64(h ^ (index * kGolden + 2));
  return h;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return static_cast<double>(counter_hash(seed, stream, index) >> 11) * 0x1.0p-53;
}

}  // namespace rfset
