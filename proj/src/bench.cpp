#include "arnold/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "arnold/engines.hpp"
#include "arnold/rng.hpp"

namespace arnold {

namespace {

uint64_t median(std::vector<uint64_t>& values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

}  // namespace

BenchResult run_bench(int log2_len, uint64_t samples, uint64_t seed) {
  if (samples < 1) throw std::domain_error("bench needs at least one sample");
  if (log2_len < 2) throw std::domain_error("bench needs n >= 2");
  using clock = std::chrono::steady_clock;

  auto rng = seeded_rng(seed, 0xbe7c4, log2_len);
  const uint64_t length = uint64_t{1} << log2_len;
  const uint64_t floor_a = 3 * (length / 4);

  std::vector<uint64_t> naive_ns, fast_ns;
  naive_ns.reserve(samples);
  fast_ns.reserve(samples);
  for (uint64_t i = 0; i < samples; ++i) {
    const uint64_t target = floor_a + 1 + rng() % (length - floor_a);
    const PeriodicWord w = synthesize_word(log2_len, target, seed ^ i);

    const auto t0 = clock::now();
    const uint64_t naive = complexity_naive_count(w);
    const auto t1 = clock::now();
    const uint64_t fast = complexity_fast(w).complexity;
    const auto t2 = clock::now();
    if (naive != fast) {
      throw std::logic_error("engine disagreement while benchmarking");
    }

    naive_ns.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    fast_ns.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
  }

  BenchResult res;
  res.n = log2_len;
  res.samples = samples;
  res.naive_median_ns = median(naive_ns);
  res.fast_median_ns = median(fast_ns);
  res.speedup = res.fast_median_ns == 0
                    ? static_cast<double>(res.naive_median_ns)
                    : static_cast<double>(res.naive_median_ns) /
                          static_cast<double>(res.fast_median_ns);
  return res;
}

}  // namespace arnold
