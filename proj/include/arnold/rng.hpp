#pragma once

#include <cstdint>
#include <random>

namespace arnold {

// splitmix64 finalizer; spreads tag bits before seeding the engine.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-purpose stream: same (seed, tags) -> same sequence.
inline std::mt19937_64 seeded_rng(uint64_t seed, uint64_t tag_a = 0,
                                  uint64_t tag_b = 0) {
  return std::mt19937_64(mix64(seed ^ mix64(tag_a ^ mix64(tag_b))));
}

}  // namespace arnold
