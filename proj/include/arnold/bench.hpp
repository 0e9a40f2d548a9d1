#pragma once

#include <cstdint>

namespace arnold {

struct BenchResult {
  int n = 0;
  uint64_t samples = 0;
  uint64_t naive_median_ns = 0;
  uint64_t fast_median_ns = 0;
  double speedup = 0.0;
};

/// Times the brute-force count against the fast engine over seeded
/// synthesized words whose complexity lies in (3*2^(n-2), 2^n], the costly
/// range for the brute force. Reports per-word medians.
BenchResult run_bench(int log2_len, uint64_t samples, uint64_t seed);

}  // namespace arnold
