#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arnold {

/// Floor of the square root, exact integer arithmetic.
uint64_t isqrt(uint64_t x);

/// A maximal block of consecutive 1-digits in a binary expansion,
/// ending-at-top position `top`, of `length` digits. Digit 0 never belongs
/// to a run.
struct Run {
  int top = 0;
  int length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A complexity value with its digit view at bit-width `width`:
/// ones count, trailing-zero count, and the maximal runs among digits
/// 1..width-1.
struct ComplexityValue {
  uint64_t value = 0;
  int width = 0;
  int nu = 0;
  int trailing_zeros = 0;
  std::vector<Run> runs;

  static ComplexityValue analyze(uint64_t value, int width);

  /// Longest run; the topmost one when several tie.
  std::optional<Run> max_run() const;

  /// Binary rendering zero-padded to the width (wider if the value needs it).
  std::string binary() const;
};

/// All final complexity values reachable within length 2^n, descending:
/// { 2^p - 2^m + 1 : 1 <= p <= n, 0 <= m <= p-1 } plus 1. The even final
/// 2^(p-1) of width p appears as 2^(p-1) - 2^0 + 1 at width p-1.
std::vector<uint64_t> finals_set(int n);

bool is_final(uint64_t value, int n);

enum class StepCase : uint8_t { clear_bit, borrow };

struct ValueStep {
  uint64_t result = 0;
  StepCase kind = StepCase::clear_bit;
};

/// Value-space model of one rank-2^k operator: saturating subtraction.
/// clear_bit when digit k of the value is 1; borrow otherwise (the
/// subtraction then removes the lowest set digit above k and sets digits
/// k..that-1).
ValueStep value_step(uint64_t value, int k, int n);

/// Minimal number of operators taking a word of complexity `value` to some
/// final value. 0 when already final. Odd values: nu - l - 1 with l the
/// maximal-run length. Even values: the cheaper of collapsing to the leading
/// digit (nu - 1) and spending rank 1 first, then the odd descent.
uint64_t min_ops(uint64_t value, int n);

enum class Subcase : uint8_t { already_final, odd, even_21, even_22 };

const char* to_string(Subcase s);

/// A minimal rank sequence to a final value. Odd plans clear one digit per
/// rank, never use rank 1, and keep all ranks distinct.
struct Plan {
  std::vector<uint64_t> ranks;
  Subcase subcase = Subcase::already_final;
  uint64_t final_value = 0;
  uint64_t count = 0;
};

Plan plan_ranks(uint64_t value, int n);

/// Distances to the nearest final value under saturating rank subtraction,
/// indexed by value, built once per n and cached. Moves may repeat ranks;
/// overshooting to 0 is legal but 0 is never a target.
const std::vector<int32_t>& bfs_table(int n);

/// Breadth-first oracle for min_ops.
int bfs_min_ops(uint64_t value, int n);

std::pair<int, int> shannon_bound(int n);

/// Exhaustive maxima of bfs_min_ops over achievable complexities at width n:
/// odd values in (2^(n-1), 2^n], even values in (2^(n-1), 2^n). Also records
/// whether the closed formula agrees with the oracle everywhere in range.
struct ShannonRow {
  int n = 0;
  int max_odd = 0;
  uint64_t witness_odd = 0;
  int max_even = 0;
  uint64_t witness_even = 0;
  int bound_odd = 0;
  int bound_even = 0;
  bool formula_matches_bfs = true;
};

ShannonRow shannon_exhaustive(int n);

}  // namespace arnold
