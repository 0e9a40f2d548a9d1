#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arnold/word.hpp"

namespace arnold {

/// Decimation of w taking every 2^level-th position starting at offset:
/// positions offset, offset + 2^level, ..., giving a word of length
/// 2^(n-level). level ranges over 0..n, offset over 0..2^level-1.
PeriodicWord thin(const PeriodicWord& w, int level, uint64_t offset);

/// Inverse of thin: reassembles the word from the complete family of its
/// decimations at one level. parts must contain each offset 0..2^level-1
/// exactly once, all pieces of equal length.
PeriodicWord union_thinned(
    const std::vector<std::pair<uint64_t, PeriodicWord>>& parts, int level);

/// Parities of every decimation of a word, all levels at once.
///
/// levels[m] has 2^m entries; entry i is the parity of thin(w, m, i), and
/// level n is the word's own bits. Each level folds out of the one below it:
/// levels[m][i] = levels[m+1][i] ^ levels[m+1][i + 2^m]. Building the whole
/// family this way costs exactly 2^n - 1 bit XORs.
struct ParityTree {
  int n = 0;
  std::vector<std::vector<uint8_t>> levels;
  uint64_t xor_count = 0;

  bool level_all_odd(int m) const;
  /// Index of the unique all-odd level, or -1. (An all-odd level forces every
  /// level below it all-even, so there is never more than one.)
  int all_odd_level() const;
};

/// Word-parallel tree construction. xor_count reports the fold's bit-XOR
/// budget of 2^n - 1; the instrumented builder certifies that figure.
ParityTree parity_tree(const PeriodicWord& w);

/// Scalar construction that physically counts every XOR it performs.
ParityTree parity_tree_instrumented(const PeriodicWord& w);

/// A detected final word: at level `level` of the minimal period's parity
/// tree every decimation is odd, which pins the complexity to
/// 2^p - 2^level + 1 where 2^p is the minimal period length.
struct FinalDetection {
  int level = 0;
  uint64_t complexity = 0;

  friend bool operator==(const FinalDetection&, const FinalDetection&) =
      default;
};

/// Reduces w to its minimal period and scans the parity tree for an all-odd
/// level. Returns the detection, or nullopt when the complexity of w is not
/// a final value. The zero word never detects; the word "1" detects with
/// complexity 1.
std::optional<FinalDetection> detect_final(const PeriodicWord& w);

}  // namespace arnold
