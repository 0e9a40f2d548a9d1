#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arnold/thinning.hpp"
#include "arnold/word.hpp"

namespace arnold {

struct SchemeStep {
  uint64_t rank = 1;
  PeriodicWord result;
};

/// A realized operator chain: the start word, every applied rank with its
/// result, and what the chain ended on.
struct SchemeTrace {
  PeriodicWord start;
  std::vector<SchemeStep> steps;
  bool terminal_zero = false;
  std::optional<FinalDetection> terminal_final;

  const PeriodicWord& terminal_word() const {
    return steps.empty() ? start : steps.back().result;
  }
};

struct NaiveResult {
  uint64_t complexity = 0;
  SchemeTrace trace;
};

/// Brute-force oracle: applies the rank-1 operator until the zero word,
/// recording every intermediate. The step count is the complexity; it never
/// exceeds 2^n.
NaiveResult complexity_naive(const PeriodicWord& w);

/// Same count without the trace, for sweeps and timing.
uint64_t complexity_naive_count(const PeriodicWord& w);

/// Descent record of the fast engine: total == sum(ranks) + final_complexity.
struct Certificate {
  std::vector<uint64_t> ranks;
  uint64_t final_complexity = 0;
  uint64_t total = 0;
};

struct FastResult {
  uint64_t complexity = 0;
  Certificate cert;
};

/// Fast engine. Round structure: reduce to the minimal period (length 2^p);
/// stop on the zero word; stop when final detection fires and add its value;
/// otherwise apply rank 2^(p-1) — a minimal-period word has complexity
/// above 2^(p-1), so the subtraction never overshoots — and continue on the
/// halved word. Total work is O(2^n) bit operations, at most n operators.
FastResult complexity_fast(const PeriodicWord& w);

/// Applies the given ranks in order at full stored length, recording every
/// intermediate, and classifies the terminal word.
SchemeTrace run_scheme(const PeriodicWord& w,
                       const std::vector<uint64_t>& ranks);

/// True iff 2^k rank-1 applications coincide with one rank-2^k application.
bool check_scheme_equivalence(const PeriodicWord& w, int k);

/// Deterministic witness generator: a word of length 2^n whose complexity is
/// exactly target. Draws a seeded odd word (complexity 2^n), then applies one
/// rank-2^k operator per set bit of 2^n - target. target == 0 gives zeros.
PeriodicWord synthesize_word(int log2_len, uint64_t target, uint64_t seed);

}  // namespace arnold
