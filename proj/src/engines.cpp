#include "arnold/engines.hpp"

#include "arnold/rng.hpp"

namespace arnold {

NaiveResult complexity_naive(const PeriodicWord& w) {
  NaiveResult res;
  res.trace.start = w;
  PeriodicWord cur = w;
  while (!cur.is_zero()) {
    cur = apply_operator(cur, 1);
    res.trace.steps.push_back({1, cur});
    ++res.complexity;
    if (res.complexity > w.len()) {
      throw std::logic_error("rank-1 iteration exceeded the nilpotency bound");
    }
  }
  res.trace.terminal_zero = true;
  return res;
}

uint64_t complexity_naive_count(const PeriodicWord& w) {
  PeriodicWord cur = w;
  uint64_t steps = 0;
  while (!cur.is_zero()) {
    detail::rank1_step_inplace(cur);
    ++steps;
    if (steps > w.len()) {
      throw std::logic_error("rank-1 iteration exceeded the nilpotency bound");
    }
  }
  return steps;
}

FastResult complexity_fast(const PeriodicWord& w) {
  FastResult res;
  PeriodicWord cur = reduce_to_minimal_period(w).word;
  while (true) {
    if (cur.is_zero()) break;
    if (auto det = detect_final(cur)) {
      res.cert.final_complexity = det->complexity;
      res.complexity += det->complexity;
      break;
    }
    // Nonzero, not final, so the minimal period is at least 2 and the
    // complexity strictly exceeds half the period length.
    const uint64_t rank = cur.len() / 2;
    cur = reduce_to_minimal_period(fold_halves(cur)).word;
    res.cert.ranks.push_back(rank);
    res.complexity += rank;
  }
  res.cert.total = res.complexity;
  return res;
}

SchemeTrace run_scheme(const PeriodicWord& w,
                       const std::vector<uint64_t>& ranks) {
  SchemeTrace trace;
  trace.start = w;
  PeriodicWord cur = w;
  for (uint64_t rank : ranks) {
    cur = apply_operator(cur, rank);
    trace.steps.push_back({rank, cur});
  }
  trace.terminal_zero = cur.is_zero();
  if (!trace.terminal_zero) trace.terminal_final = detect_final(cur);
  return trace;
}

bool check_scheme_equivalence(const PeriodicWord& w, int k) {
  if (k < 0 || k > w.log2_len()) {
    throw std::domain_error("scheme level " + std::to_string(k) +
                            " out of range");
  }
  const uint64_t rank = uint64_t{1} << k;
  return iterate_rank1(w, rank) == apply_operator(w, rank);
}

PeriodicWord synthesize_word(int log2_len, uint64_t target, uint64_t seed) {
  PeriodicWord w = PeriodicWord::zeros(log2_len);  // validates log2_len
  const uint64_t length = w.len();
  if (target > length) {
    throw std::domain_error("target complexity " + std::to_string(target) +
                            " exceeds word length " + std::to_string(length));
  }
  if (target == 0) return w;
  auto rng = seeded_rng(seed, 0x73796e7468ULL,
                        (uint64_t(log2_len) << 40) ^ target);
  w = PeriodicWord::random(log2_len, rng);
  if (!w.parity_odd()) w.flip_bit(rng() & (length - 1));
  // Each rank-2^k application lowers the complexity by exactly 2^k as long
  // as the running value stays above 2^k; processing the deficiency bits in
  // descending order keeps it above the target throughout.
  const uint64_t deficiency = length - target;
  for (int k = log2_len - 1; k >= 0; --k) {
    if ((deficiency >> k) & 1) w = apply_operator(w, uint64_t{1} << k);
  }
  return w;
}

}  // namespace arnold
