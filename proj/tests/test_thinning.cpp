#include "arnold/thinning.hpp"

#include <vector>

#include "arnold/engines.hpp"
#include "arnold/planner.hpp"
#include "arnold/rng.hpp"
#include "doctest.h"

using namespace arnold;

TEST_CASE("thin extracts every 2^m-th position") {
  const auto w = PeriodicWord::parse("0b10110100");
  CHECK(thin(w, 1, 0) == PeriodicWord::parse("0b1100"));
  CHECK(thin(w, 1, 1) == PeriodicWord::parse("0b0110"));
  CHECK(thin(w, 0, 0) == w);
  CHECK(thin(w, 3, 5) == PeriodicWord::parse("0b1"));

  // Against the index arithmetic directly.
  auto rng = seeded_rng(21, 0x1);
  for (int i = 0; i < 20; ++i) {
    const auto v = PeriodicWord::random(6, rng);
    for (int m = 0; m <= 6; ++m) {
      for (uint64_t off = 0; off < (uint64_t{1} << m); ++off) {
        const auto piece = thin(v, m, off);
        for (uint64_t j = 0; j < piece.len(); ++j) {
          CHECK(piece.bit(j) == v.bit(off + (j << m)));
        }
      }
    }
  }
}

TEST_CASE("thin validates level and offset") {
  const auto w = PeriodicWord::parse("0b10110100");
  CHECK_THROWS_AS(thin(w, 4, 0), std::domain_error);
  CHECK_THROWS_AS(thin(w, -1, 0), std::domain_error);
  CHECK_THROWS_AS(thin(w, 1, 2), std::domain_error);
}

TEST_CASE("union_thinned inverts thin") {
  const std::vector<std::pair<uint64_t, PeriodicWord>> parts = {
      {0, PeriodicWord::parse("0b1100")}, {1, PeriodicWord::parse("0b0110")}};
  CHECK(union_thinned(parts, 1) == PeriodicWord::parse("0b10110100"));

  const auto w = PeriodicWord::parse("0b1001");
  CHECK(union_thinned({{0, w}}, 0) == w);

  auto rng = seeded_rng(22, 0x2);
  for (int n = 0; n <= 9; ++n) {
    const auto v = PeriodicWord::random(n, rng);
    for (int m = 0; m <= n; ++m) {
      std::vector<std::pair<uint64_t, PeriodicWord>> family;
      for (uint64_t off = 0; off < (uint64_t{1} << m); ++off) {
        family.emplace_back(off, thin(v, m, off));
      }
      CHECK(union_thinned(family, m) == v);
    }
  }
}

TEST_CASE("union_thinned validates its family") {
  const auto p = PeriodicWord::parse("0b10");
  CHECK_THROWS_AS(union_thinned({{0, p}, {0, p}}, 1), std::domain_error);
  CHECK_THROWS_AS(union_thinned({{0, p}}, 1), std::domain_error);
  CHECK_THROWS_AS(union_thinned({{0, p}, {2, p}}, 1), std::domain_error);
  CHECK_THROWS_AS(
      union_thinned({{0, p}, {1, PeriodicWord::parse("0b1001")}}, 1),
      std::domain_error);
}

TEST_CASE("parity tree of 0b10110100") {
  const auto tree = parity_tree(PeriodicWord::parse("0b10110100"));
  CHECK(tree.n == 3);
  CHECK(tree.levels[0] == std::vector<uint8_t>{0});
  CHECK(tree.levels[1] == std::vector<uint8_t>{0, 0});
  CHECK(tree.levels[2] == std::vector<uint8_t>{1, 1, 1, 1});
  CHECK(tree.levels[3] == std::vector<uint8_t>{1, 0, 1, 1, 0, 1, 0, 0});
  CHECK(tree.xor_count == 7);
  CHECK(tree.all_odd_level() == 2);
}

TEST_CASE("parity tree edge words") {
  const auto zero_tree = parity_tree(PeriodicWord::zeros(4));
  for (const auto& level : zero_tree.levels) {
    for (uint8_t b : level) CHECK(b == 0);
  }
  const auto one_tree = parity_tree(PeriodicWord::parse("0b1"));
  CHECK(one_tree.levels[0] == std::vector<uint8_t>{1});
  CHECK(one_tree.xor_count == 0);
}

TEST_CASE("instrumented tree matches the fold and its XOR budget") {
  auto rng = seeded_rng(23, 0x3);
  for (int n = 0; n <= 10; ++n) {
    for (int i = 0; i < 8; ++i) {
      const auto w = PeriodicWord::random(n, rng);
      const auto fast = parity_tree(w);
      const auto ref = parity_tree_instrumented(w);
      CHECK(fast.levels == ref.levels);
      CHECK(ref.xor_count == w.len() - 1);
      CHECK(fast.xor_count == ref.xor_count);
    }
  }
}

TEST_CASE("tree entries are decimation parities; at most one all-odd level") {
  auto rng = seeded_rng(24, 0x4);
  for (int n = 0; n <= 8; ++n) {
    for (int i = 0; i < 10; ++i) {
      const auto w = PeriodicWord::random(n, rng);
      const auto tree = parity_tree(w);
      int all_odd = 0;
      for (int m = 0; m <= n; ++m) {
        if (tree.level_all_odd(m)) ++all_odd;
        for (uint64_t off = 0; off < (uint64_t{1} << m); ++off) {
          const bool odd = parity(thin(w, m, off)) == Parity::odd;
          CHECK(tree.levels[m][off] == (odd ? 1 : 0));
        }
      }
      CHECK(all_odd <= 1);
    }
  }
}

TEST_CASE("detect_final on the worked examples") {
  const auto d1 = detect_final(PeriodicWord::parse("0b10110100"));
  REQUIRE(d1.has_value());
  CHECK(d1->level == 2);
  CHECK(d1->complexity == 5);

  // Reduces to 0b1101 first, then level 0 is odd.
  const auto d2 = detect_final(PeriodicWord::parse("0b11011101"));
  REQUIRE(d2.has_value());
  CHECK(d2->level == 0);
  CHECK(d2->complexity == 4);
  CHECK(complexity_naive_count(PeriodicWord::parse("0b11011101")) == 4);

  CHECK_FALSE(detect_final(PeriodicWord::parse("0b10000010")).has_value());
  CHECK(complexity_naive_count(PeriodicWord::parse("0b10000010")) == 6);

  CHECK_FALSE(detect_final(PeriodicWord::zeros(3)).has_value());
  CHECK_FALSE(detect_final(PeriodicWord::parse("0b0")).has_value());
  const auto d3 = detect_final(PeriodicWord::parse("0b1"));
  REQUIRE(d3.has_value());
  CHECK(d3->complexity == 1);
}

TEST_CASE("detection agrees with the brute-force oracle exhaustively") {
  for (int n = 0; n <= 4; ++n) {
    const uint64_t count = uint64_t{1} << (uint64_t{1} << n);
    for (uint64_t v = 0; v < count; ++v) {
      PeriodicWord w = PeriodicWord::zeros(n);
      for (uint64_t i = 0; i < w.len(); ++i) {
        if ((v >> i) & 1) w.flip_bit(i);
      }
      const auto det = detect_final(w);
      const uint64_t a = complexity_naive_count(w);
      const bool expect = a > 0 && is_final(a, n);
      CHECK(det.has_value() == expect);
      if (det) CHECK(det->complexity == a);
    }
  }
}
