#include "arnold/word.hpp"

#include <algorithm>
#include <bit>

namespace arnold {

namespace {

constexpr int kMaxLog2Len = 34;

int checked_log2_len(int n) {
  if (n < 0 || n > kMaxLog2Len) {
    throw std::domain_error("log2 word length out of range: " +
                            std::to_string(n));
  }
  return n;
}

}  // namespace

PeriodicWord::PeriodicWord(int n)
    : n_(n), blocks_(((uint64_t{1} << n) + 63) >> 6, 0) {}

uint64_t PeriodicWord::last_mask() const {
  const uint64_t rem = len() & 63;
  return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}

PeriodicWord PeriodicWord::zeros(int log2_len) {
  return PeriodicWord(checked_log2_len(log2_len));
}

PeriodicWord PeriodicWord::ones(int log2_len) {
  PeriodicWord w(checked_log2_len(log2_len));
  std::fill(w.blocks_.begin(), w.blocks_.end(), ~uint64_t{0});
  w.blocks_.back() &= w.last_mask();
  return w;
}

PeriodicWord PeriodicWord::from_bits(const std::vector<uint8_t>& bits) {
  if (bits.empty() || !std::has_single_bit(bits.size())) {
    throw std::domain_error("word length must be a power of two, got " +
                            std::to_string(bits.size()));
  }
  PeriodicWord w(checked_log2_len(std::countr_zero(bits.size())));
  for (uint64_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) w.flip_bit(i);
  }
  return w;
}

PeriodicWord PeriodicWord::random(int log2_len, std::mt19937_64& rng) {
  PeriodicWord w(checked_log2_len(log2_len));
  for (auto& b : w.blocks_) b = rng();
  w.blocks_.back() &= w.last_mask();
  return w;
}

PeriodicWord PeriodicWord::parse(std::string_view text) {
  if (text.size() < 3) {
    throw parse_error("word text too short: \"" + std::string(text) + "\"");
  }
  const std::string_view prefix = text.substr(0, 2);
  const std::string_view digits = text.substr(2);
  std::vector<uint8_t> bits;
  if (prefix == "0b" || prefix == "0B") {
    bits.reserve(digits.size());
    for (char c : digits) {
      if (c != '0' && c != '1') {
        throw parse_error(std::string("illegal binary digit '") + c + "'");
      }
      bits.push_back(static_cast<uint8_t>(c - '0'));
    }
  } else if (prefix == "0x" || prefix == "0X") {
    bits.reserve(digits.size() * 4);
    for (char c : digits) {
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        throw parse_error(std::string("illegal hex digit '") + c + "'");
      }
      for (int k = 3; k >= 0; --k) bits.push_back((v >> k) & 1);
    }
  } else {
    throw parse_error("expected 0b or 0x prefix: \"" + std::string(text) +
                      "\"");
  }
  if (bits.empty() || !std::has_single_bit(bits.size())) {
    throw parse_error("word length " + std::to_string(bits.size()) +
                      " is not a power of two");
  }
  return from_bits(bits);
}

void PeriodicWord::set_bit(uint64_t pos, bool value) {
  const uint64_t mask = uint64_t{1} << (pos & 63);
  if (value) {
    blocks_[pos >> 6] |= mask;
  } else {
    blocks_[pos >> 6] &= ~mask;
  }
}

bool PeriodicWord::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](uint64_t b) { return b == 0; });
}

uint64_t PeriodicWord::popcount() const {
  uint64_t total = 0;
  for (uint64_t b : blocks_) total += std::popcount(b);
  return total;
}

std::string PeriodicWord::to_binary_string() const {
  std::string out = "0b";
  out.reserve(2 + len());
  for (uint64_t i = 0; i < len(); ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

std::string PeriodicWord::to_hex_string() const {
  if (len() % 4 != 0) {
    throw std::domain_error("hex rendering needs a length divisible by 4");
  }
  static const char* kDigits = "0123456789abcdef";
  std::string out = "0x";
  out.reserve(2 + len() / 4);
  for (uint64_t i = 0; i < len(); i += 4) {
    const int v = (bit(i) << 3) | (bit(i + 1) << 2) | (bit(i + 2) << 1) |
                  static_cast<int>(bit(i + 3));
    out.push_back(kDigits[v]);
  }
  return out;
}

OperatorRank OperatorRank::checked(uint64_t h, int log2_len) {
  if (h == 0 || !std::has_single_bit(h)) {
    throw std::domain_error("operator rank must be a power of two, got " +
                            std::to_string(h));
  }
  const int k = std::countr_zero(h);
  if (k > log2_len) {
    throw std::domain_error("operator rank " + std::to_string(h) +
                            " exceeds word length 2^" +
                            std::to_string(log2_len));
  }
  return {h, k};
}

PeriodicWord apply_operator(const PeriodicWord& w, uint64_t rank) {
  OperatorRank::checked(rank, w.log2_len());
  const uint64_t L = w.len();
  const uint64_t h = rank & (L - 1);  // rank == 2^n wraps to a zero shift
  PeriodicWord out(w.n_);
  if (L <= 64) {
    const uint64_t x = w.blocks_[0];
    const uint64_t rot =
        h == 0 ? x : (((x >> h) | (x << (L - h))) & w.last_mask());
    out.blocks_[0] = x ^ rot;
    return out;
  }
  const size_t nb = w.blocks_.size();
  if (h == 0) {
    return out;  // w XOR w
  }
  if (h >= 64) {
    const size_t shift = h >> 6;  // whole blocks; h is a power of two
    for (size_t i = 0; i < nb; ++i) {
      out.blocks_[i] = w.blocks_[i] ^ w.blocks_[(i + shift) & (nb - 1)];
    }
  } else {
    for (size_t i = 0; i < nb; ++i) {
      const uint64_t next = w.blocks_[(i + 1) & (nb - 1)];
      out.blocks_[i] = w.blocks_[i] ^ ((w.blocks_[i] >> h) | (next << (64 - h)));
    }
  }
  return out;
}

PeriodicWord apply_operator_reference(const PeriodicWord& w, uint64_t rank) {
  OperatorRank::checked(rank, w.log2_len());
  const uint64_t L = w.len();
  PeriodicWord out = PeriodicWord::zeros(w.log2_len());
  for (uint64_t j = 0; j < L; ++j) {
    out.set_bit(j, w.bit(j) != w.bit((j + rank) & (L - 1)));
  }
  return out;
}

namespace detail {

void rank1_step_inplace(PeriodicWord& w) {
  auto& b = w.blocks_;
  const uint64_t L = w.len();
  if (L <= 64) {
    const uint64_t x = b[0];
    const uint64_t rot =
        L == 1 ? x : (((x >> 1) | (x << (L - 1))) & w.last_mask());
    b[0] = x ^ rot;
    return;
  }
  const size_t nb = b.size();
  const uint64_t first = b[0];
  for (size_t i = 0; i < nb; ++i) {
    const uint64_t next = (i + 1 < nb) ? b[i + 1] : first;
    b[i] ^= (b[i] >> 1) | (next << 63);
  }
}

}  // namespace detail

PeriodicWord iterate_rank1(const PeriodicWord& w, uint64_t count) {
  PeriodicWord cur = w;
  for (uint64_t i = 0; i < count; ++i) detail::rank1_step_inplace(cur);
  return cur;
}

PeriodicWord fold_halves(const PeriodicWord& w) {
  if (w.log2_len() == 0) {
    throw std::domain_error("fold_halves needs length >= 2");
  }
  const uint64_t L = w.len();
  PeriodicWord out(w.n_ - 1);
  if (L <= 64) {
    const uint64_t x = w.blocks_[0];
    out.blocks_[0] = (x ^ (x >> (L / 2))) & out.last_mask();
  } else {
    const size_t half = w.blocks_.size() / 2;
    for (size_t i = 0; i < half; ++i) {
      out.blocks_[i] = w.blocks_[i] ^ w.blocks_[i + half];
    }
  }
  return out;
}

MinimalPeriod reduce_to_minimal_period(const PeriodicWord& w) {
  PeriodicWord cur = w;
  uint64_t factor = 1;
  while (cur.n_ >= 1) {
    const uint64_t L = cur.len();
    if (L <= 64) {
      const uint64_t half = L / 2;
      const uint64_t mask = (uint64_t{1} << half) - 1;
      const uint64_t x = cur.blocks_[0];
      if ((x & mask) != (x >> half)) break;
      PeriodicWord next(cur.n_ - 1);
      next.blocks_[0] = x & mask;
      cur = std::move(next);
    } else {
      const size_t half = cur.blocks_.size() / 2;
      const bool equal =
          std::equal(cur.blocks_.begin(), cur.blocks_.begin() + half,
                     cur.blocks_.begin() + half);
      if (!equal) break;
      PeriodicWord next(cur.n_ - 1);
      std::copy(cur.blocks_.begin(), cur.blocks_.begin() + half,
                next.blocks_.begin());
      cur = std::move(next);
    }
    factor <<= 1;
  }
  return {std::move(cur), factor};
}

}  // namespace arnold
