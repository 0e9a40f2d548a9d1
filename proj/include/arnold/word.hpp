#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arnold {

/// Error for malformed word text.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

class PeriodicWord;
struct MinimalPeriod;

namespace detail {
/// One rank-1 step in place. Used by hot loops that own their copy; the
/// public API stays pure.
void rank1_step_inplace(PeriodicWord& w);
}  // namespace detail

/// One period of an infinite cyclic binary word of length 2^n.
///
/// Position 0 holds the first character of the text form. Bits are packed 64
/// per block: position j lives in blocks()[j >> 6] at bit (j & 63), and the
/// unused high bits of the last block stay zero. The stored period need not
/// be minimal; reduce_to_minimal_period() canonicalizes on demand.
///
/// All operations treat words as immutable values and return new words, so
/// instances are safe to share across threads.
class PeriodicWord {
 public:
  PeriodicWord() : n_(0), blocks_(1, 0) {}  // the length-1 word "0"

  static PeriodicWord zeros(int log2_len);
  static PeriodicWord ones(int log2_len);
  static PeriodicWord from_bits(const std::vector<uint8_t>& bits);
  static PeriodicWord random(int log2_len, std::mt19937_64& rng);

  /// Parses "0b..." (one position per digit) or "0x..." (four positions per
  /// digit, high bit first). The digit count must make the length a power of
  /// two. Throws parse_error on bad characters or bad length.
  static PeriodicWord parse(std::string_view text);

  int log2_len() const { return n_; }
  uint64_t len() const { return uint64_t{1} << n_; }

  bool bit(uint64_t pos) const {
    return (blocks_[pos >> 6] >> (pos & 63)) & 1;
  }
  void set_bit(uint64_t pos, bool value);
  void flip_bit(uint64_t pos) { blocks_[pos >> 6] ^= uint64_t{1} << (pos & 63); }

  bool is_zero() const;
  bool all_ones() const { return popcount() == len(); }
  uint64_t popcount() const;
  bool parity_odd() const { return popcount() & 1; }

  std::string to_binary_string() const;
  /// Hex form; the length must be a multiple of four bits.
  std::string to_hex_string() const;

  const std::vector<uint64_t>& blocks() const { return blocks_; }

  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

 private:
  explicit PeriodicWord(int n);
  uint64_t last_mask() const;

  int n_;
  std::vector<uint64_t> blocks_;

  friend PeriodicWord apply_operator(const PeriodicWord&, uint64_t);
  friend PeriodicWord fold_halves(const PeriodicWord&);
  friend MinimalPeriod reduce_to_minimal_period(const PeriodicWord&);
  friend void detail::rank1_step_inplace(PeriodicWord&);
};

enum class Parity : uint8_t { even, odd };

/// Word parity: odd iff the XOR over all positions is 1.
inline Parity parity(const PeriodicWord& w) {
  return w.parity_odd() ? Parity::odd : Parity::even;
}

inline const char* to_string(Parity p) {
  return p == Parity::odd ? "odd" : "even";
}

/// Shift distance h = 2^k of the XOR shift-difference operator.
struct OperatorRank {
  uint64_t value = 1;
  int log2 = 0;

  /// Validates h = 2^k with k <= n; throws std::domain_error otherwise.
  static OperatorRank checked(uint64_t h, int log2_len);
};

/// z_j = w_j XOR w_{(j+h) mod 2^n}, indices cyclic. Rank must be a power of
/// two not exceeding the length; rank 2^n yields the zero word.
PeriodicWord apply_operator(const PeriodicWord& w, uint64_t rank);

/// Bit-at-a-time reimplementation of apply_operator, kept for cross-checking
/// the packed path in instrumented tests.
PeriodicWord apply_operator_reference(const PeriodicWord& w, uint64_t rank);

/// count-fold application of the rank-1 operator.
PeriodicWord iterate_rank1(const PeriodicWord& w, uint64_t count);

/// Lower half XOR upper half; the length halves. This equals the first half
/// of apply_operator(w, len/2), whose result is periodic with period len/2,
/// so it represents the same infinite word at half storage.
PeriodicWord fold_halves(const PeriodicWord& w);

struct MinimalPeriod {
  PeriodicWord word;
  uint64_t factor = 1;  // original length / minimal length
};

/// Halves the stored period while both halves agree bitwise. The all-zeros
/// word of any length reduces to the single-position word "0".
MinimalPeriod reduce_to_minimal_period(const PeriodicWord& w);

}  // namespace arnold
