#pragma once

#include <cstdint>
#include <numbers>
#include <random>

namespace bohr {

// splitmix64 finalizer; derives independent stream seeds from (seed, stream).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits; unlike std::uniform_real_distribution
// the sequence is the same on every standard library.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_angle(std::mt19937_64& rng) { return 2.0 * std::numbers::pi * uniform01(rng); }

inline int random_sign(std::mt19937_64& rng) { return (rng() >> 63) != 0 ? 1 : -1; }

}  // namespace bohr
