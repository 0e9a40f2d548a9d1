#include "arnold/planner.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace arnold {

namespace {

constexpr int kMaxPlannerBits = 24;

void check_width(int n) {
  if (n < 0 || n > kMaxPlannerBits) {
    throw std::domain_error("bit width out of range: " + std::to_string(n));
  }
}

void check_value(uint64_t value, int n) {
  check_width(n);
  if (value < 1 || value > (uint64_t{1} << n)) {
    throw std::domain_error("value " + std::to_string(value) +
                            " out of range [1, 2^" + std::to_string(n) + "]");
  }
}

std::vector<Run> compute_runs(uint64_t value, int width) {
  std::vector<Run> runs;
  int pos = width - 1;
  while (pos >= 1) {
    if ((value >> pos) & 1) {
      const int top = pos;
      while (pos >= 1 && ((value >> pos) & 1)) --pos;
      runs.push_back({top, top - pos});
    } else {
      --pos;
    }
  }
  return runs;
}

// Clear-bit descent of an odd value: keep the topmost maximal run and digit
// 0, emit one rank per remaining set digit, top down. Empty when the value
// is already final. The landing value has the shape 1^l 0...0 1, which is
// always final.
std::pair<std::vector<uint64_t>, uint64_t> odd_descent(uint64_t value, int n) {
  if (is_final(value, n)) return {{}, value};
  const auto cv = ComplexityValue::analyze(value, n);
  const Run run = *cv.max_run();
  uint64_t keep = uint64_t{1};
  for (int k = run.top; k > run.top - run.length; --k) keep |= uint64_t{1} << k;
  std::vector<uint64_t> ranks;
  for (int k = n; k >= 1; --k) {
    if (((value >> k) & 1) && !((keep >> k) & 1)) {
      ranks.push_back(uint64_t{1} << k);
    }
  }
  return {std::move(ranks), keep};
}

}  // namespace

uint64_t isqrt(uint64_t x) {
  if (x < 2) return x;
  uint64_t r = x;
  uint64_t next = (x + 1) / 2;
  while (next < r) {
    r = next;
    next = (next + x / next) / 2;
  }
  return r;
}

ComplexityValue ComplexityValue::analyze(uint64_t value, int width) {
  check_width(width);
  ComplexityValue cv;
  cv.value = value;
  cv.width = width;
  cv.nu = std::popcount(value);
  cv.trailing_zeros = value == 0 ? 0 : std::countr_zero(value);
  cv.runs = compute_runs(value, width);
  return cv;
}

std::optional<Run> ComplexityValue::max_run() const {
  std::optional<Run> best;
  for (const Run& r : runs) {
    if (!best || r.length > best->length) best = r;  // first hit is topmost
  }
  return best;
}

std::string ComplexityValue::binary() const {
  const int digits =
      std::max(width, value == 0 ? 1 : static_cast<int>(std::bit_width(value)));
  std::string out(digits, '0');
  for (int i = 0; i < digits; ++i) {
    if ((value >> i) & 1) out[digits - 1 - i] = '1';
  }
  return out;
}

std::vector<uint64_t> finals_set(int n) {
  check_width(n);
  std::vector<uint64_t> out;
  for (int p = n; p >= 1; --p) {
    for (int m = 0; m < p; ++m) {
      out.push_back((uint64_t{1} << p) - (uint64_t{1} << m) + 1);
    }
  }
  out.push_back(1);
  return out;
}

bool is_final(uint64_t value, int n) {
  check_width(n);
  if (value == 0 || value > (uint64_t{1} << n)) return false;
  if (value == 1) return true;
  const int p = std::bit_width(value - 1);  // 2^(p-1) < value <= 2^p
  const uint64_t gap = (uint64_t{1} << p) + 1 - value;  // 2^m for final values
  return std::has_single_bit(gap) && gap <= (uint64_t{1} << (p - 1));
}

ValueStep value_step(uint64_t value, int k, int n) {
  check_width(n);
  if (k < 0 || k > n) {
    throw std::domain_error("rank exponent " + std::to_string(k) +
                            " out of range [0, " + std::to_string(n) + "]");
  }
  const uint64_t rank = uint64_t{1} << k;
  ValueStep step;
  step.result = value >= rank ? value - rank : 0;
  step.kind = ((value >> k) & 1) ? StepCase::clear_bit : StepCase::borrow;
  return step;
}

uint64_t min_ops(uint64_t value, int n) {
  check_value(value, n);
  if (is_final(value, n)) return 0;
  const auto cv = ComplexityValue::analyze(value, n);
  if (value & 1) {
    return uint64_t(cv.nu) - uint64_t(cv.max_run()->length) - 1;
  }
  const uint64_t direct = uint64_t(cv.nu) - 1;   // collapse to the leading digit
  const uint64_t via_odd = 1 + min_ops(value - 1, n);  // rank 1, then odd descent
  return std::min(direct, via_odd);
}

const char* to_string(Subcase s) {
  switch (s) {
    case Subcase::already_final:
      return "already-final";
    case Subcase::odd:
      return "odd";
    case Subcase::even_21:
      return "even-2.1";
    case Subcase::even_22:
      return "even-2.2";
  }
  return "?";
}

Plan plan_ranks(uint64_t value, int n) {
  check_value(value, n);
  Plan plan;
  if (is_final(value, n)) {
    plan.subcase = Subcase::already_final;
    plan.final_value = value;
    return plan;
  }
  if (value & 1) {
    auto [ranks, fin] = odd_descent(value, n);
    plan.ranks = std::move(ranks);
    plan.subcase = Subcase::odd;
    plan.final_value = fin;
    plan.count = plan.ranks.size();
    return plan;
  }
  // Even: route 1 clears everything but the leading digit; route 2 spends
  // rank 1 to go odd, then descends. Ties go to route 2, which lands on the
  // richer final shape.
  const int lead = std::bit_width(value) - 1;
  std::vector<uint64_t> direct_ranks;
  for (int k = lead - 1; k >= 1; --k) {
    if ((value >> k) & 1) direct_ranks.push_back(uint64_t{1} << k);
  }
  auto [odd_ranks, odd_final] = odd_descent(value - 1, n);
  if (1 + odd_ranks.size() <= direct_ranks.size()) {
    plan.subcase = Subcase::even_22;
    plan.ranks.reserve(1 + odd_ranks.size());
    plan.ranks.push_back(1);
    plan.ranks.insert(plan.ranks.end(), odd_ranks.begin(), odd_ranks.end());
    plan.final_value = odd_final;
  } else {
    plan.subcase = Subcase::even_21;
    plan.ranks = std::move(direct_ranks);
    plan.final_value = uint64_t{1} << lead;
  }
  plan.count = plan.ranks.size();
  return plan;
}

const std::vector<int32_t>& bfs_table(int n) {
  check_width(n);
  if (n < 1) throw std::domain_error("bfs table needs n >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<int32_t>>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  const uint64_t top = uint64_t{1} << n;
  auto dist = std::make_unique<std::vector<int32_t>>(top + 1, -1);
  std::vector<uint32_t> frontier;
  for (uint64_t f : finals_set(n)) {
    (*dist)[f] = 0;
    frontier.push_back(static_cast<uint32_t>(f));
  }
  // Walk edges backwards: value -> value + 2^k reaches value in one move.
  std::vector<uint32_t> next;
  int32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (uint32_t b : frontier) {
      for (int k = 0; k <= n; ++k) {
        const uint64_t a = uint64_t{b} + (uint64_t{1} << k);
        if (a <= top && (*dist)[a] < 0) {
          (*dist)[a] = depth;
          next.push_back(static_cast<uint32_t>(a));
        }
      }
    }
    frontier.swap(next);
  }
  auto& slot = cache[n];
  slot = std::move(dist);
  return *slot;
}

int bfs_min_ops(uint64_t value, int n) {
  check_value(value, n);
  return bfs_table(n)[value];
}

std::pair<int, int> shannon_bound(int n) {
  if (n < 1) throw std::domain_error("shannon bound needs n >= 1");
  // floor(n - 2*sqrt(n) + 1) = n + 1 - ceil(2*sqrt(n)), all integer.
  const uint64_t root = isqrt(4 * uint64_t(n));
  const uint64_t ceil_2sqrt = root * root == 4 * uint64_t(n) ? root : root + 1;
  const int odd = static_cast<int>(n + 1 - int64_t(ceil_2sqrt));
  return {odd, odd + 1};
}

ShannonRow shannon_exhaustive(int n) {
  if (n < 1) throw std::domain_error("shannon report needs n >= 1");
  check_width(n);
  const auto& dist = bfs_table(n);
  ShannonRow row;
  row.n = n;
  const uint64_t lo = uint64_t{1} << (n - 1);
  const uint64_t hi = uint64_t{1} << n;
  for (uint64_t a = lo + 1; a <= hi; ++a) {
    const int d = dist[a];
    if (a & 1) {
      if (d > row.max_odd) {
        row.max_odd = d;
        row.witness_odd = a;
      }
    } else if (a != hi && d > row.max_even) {
      row.max_even = d;
      row.witness_even = a;
    }
    if (min_ops(a, n) != uint64_t(d)) row.formula_matches_bfs = false;
  }
  for (uint64_t f : finals_set(n)) {
    if (min_ops(f, n) != uint64_t(dist[f])) row.formula_matches_bfs = false;
  }
  const auto [bound_odd, bound_even] = shannon_bound(n);
  row.bound_odd = bound_odd;
  row.bound_even = bound_even;
  return row;
}

}  // namespace arnold
