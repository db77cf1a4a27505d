#pragma once

#include <cstdint>
#include <random>

namespace coop {

using Rng = std::mt19937_64;

// SplitMix64 step, used to decorrelate derived seed streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic sub-stream seed: same (base, stream) always yields the same
// seed, distinct streams do not collide in practice.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(splitmix64(base) ^ (0x632be59bd9b4e019ULL * (stream + 1)));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace coop
