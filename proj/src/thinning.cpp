#include "arnold/thinning.hpp"

#include <algorithm>

namespace arnold {

namespace {

std::vector<uint8_t> expand_bits(const PeriodicWord& w) {
  std::vector<uint8_t> out(w.len());
  for (uint64_t i = 0; i < w.len(); ++i) out[i] = w.bit(i);
  return out;
}

}  // namespace

PeriodicWord thin(const PeriodicWord& w, int level, uint64_t offset) {
  const int n = w.log2_len();
  if (level < 0 || level > n) {
    throw std::domain_error("thinning level " + std::to_string(level) +
                            " out of range for length 2^" + std::to_string(n));
  }
  if (offset >= (uint64_t{1} << level)) {
    throw std::domain_error("thinning offset " + std::to_string(offset) +
                            " out of range for level " + std::to_string(level));
  }
  PeriodicWord out = PeriodicWord::zeros(n - level);
  for (uint64_t j = 0; j < out.len(); ++j) {
    if (w.bit(offset + (j << level))) out.flip_bit(j);
  }
  return out;
}

PeriodicWord union_thinned(
    const std::vector<std::pair<uint64_t, PeriodicWord>>& parts, int level) {
  if (level < 0 || level > 30) {
    throw std::domain_error("union level out of range: " +
                            std::to_string(level));
  }
  const uint64_t expected = uint64_t{1} << level;
  if (parts.size() != expected) {
    throw std::domain_error("union needs exactly " + std::to_string(expected) +
                            " parts, got " + std::to_string(parts.size()));
  }
  const int piece_n = parts.front().second.log2_len();
  std::vector<uint8_t> seen(expected, 0);
  PeriodicWord out = PeriodicWord::zeros(level + piece_n);
  for (const auto& [offset, piece] : parts) {
    if (offset >= expected) {
      throw std::domain_error("union offset " + std::to_string(offset) +
                              " out of range");
    }
    if (seen[offset]) {
      throw std::domain_error("duplicate union offset " +
                              std::to_string(offset));
    }
    if (piece.log2_len() != piece_n) {
      throw std::domain_error("union parts have inconsistent lengths");
    }
    seen[offset] = 1;
    for (uint64_t j = 0; j < piece.len(); ++j) {
      if (piece.bit(j)) out.flip_bit(offset + (j << level));
    }
  }
  return out;
}

bool ParityTree::level_all_odd(int m) const {
  const auto& lv = levels[m];
  return std::all_of(lv.begin(), lv.end(), [](uint8_t b) { return b == 1; });
}

int ParityTree::all_odd_level() const {
  for (int m = 0; m <= n; ++m) {
    if (level_all_odd(m)) return m;
  }
  return -1;
}

ParityTree parity_tree(const PeriodicWord& w) {
  ParityTree tree;
  tree.n = w.log2_len();
  tree.levels.resize(tree.n + 1);
  PeriodicWord cur = w;
  tree.levels[tree.n] = expand_bits(cur);
  for (int m = tree.n - 1; m >= 0; --m) {
    cur = fold_halves(cur);
    tree.levels[m] = expand_bits(cur);
  }
  tree.xor_count = w.len() - 1;
  return tree;
}

ParityTree parity_tree_instrumented(const PeriodicWord& w) {
  ParityTree tree;
  tree.n = w.log2_len();
  tree.levels.resize(tree.n + 1);
  tree.levels[tree.n] = expand_bits(w);
  uint64_t xors = 0;
  for (int m = tree.n - 1; m >= 0; --m) {
    const auto& below = tree.levels[m + 1];
    const uint64_t width = uint64_t{1} << m;
    std::vector<uint8_t> lv(width);
    for (uint64_t i = 0; i < width; ++i) {
      lv[i] = below[i] ^ below[i + width];
      ++xors;
    }
    tree.levels[m] = std::move(lv);
  }
  tree.xor_count = xors;
  return tree;
}

std::optional<FinalDetection> detect_final(const PeriodicWord& w) {
  PeriodicWord u = reduce_to_minimal_period(w).word;
  const int p = u.log2_len();
  if (p == 0) {
    if (u.bit(0)) return FinalDetection{0, 1};
    return std::nullopt;
  }
  // Fold once per level; level m of the tree is u folded p-m times. The word
  // itself (level p) cannot be all-odd once the period is minimal.
  PeriodicWord cur = u;
  for (int m = p - 1; m >= 0; --m) {
    cur = fold_halves(cur);
    if (cur.all_ones()) {
      return FinalDetection{m, (uint64_t{1} << p) - (uint64_t{1} << m) + 1};
    }
  }
  return std::nullopt;
}

}  // namespace arnold
