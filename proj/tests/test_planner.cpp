#include "arnold/planner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "arnold/rng.hpp"
#include "doctest.h"

using namespace arnold;

TEST_CASE("isqrt is the exact floor") {
  for (uint64_t x = 0; x < 70000; ++x) {
    const uint64_t r = isqrt(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
  CHECK(isqrt(uint64_t{1} << 62) == (uint64_t{1} << 31));
  CHECK(isqrt((uint64_t{1} << 62) - 1) == (uint64_t{1} << 31) - 1);
}

TEST_CASE("finals_set") {
  CHECK(finals_set(4) ==
        std::vector<uint64_t>{16, 15, 13, 9, 8, 7, 5, 4, 3, 2, 1});
  CHECK(finals_set(1) == std::vector<uint64_t>{2, 1});
  const auto f6 = finals_set(6);
  CHECK(std::count(f6.begin(), f6.end(), 49) == 1);  // 2^6 - 2^4 + 1
  CHECK(finals_set(0) == std::vector<uint64_t>{1});

  for (int n = 1; n <= 14; ++n) {
    const auto finals = finals_set(n);
    const std::set<uint64_t> lookup(finals.begin(), finals.end());
    CHECK(finals.size() == uint64_t(n) * (n + 1) / 2 + 1);
    for (uint64_t a = 1; a <= (uint64_t{1} << n); ++a) {
      CHECK(is_final(a, n) == (lookup.count(a) == 1));
    }
  }
}

TEST_CASE("value_step on the documented transformations") {
  // 2^4+2^3+2^1+2^0 loses its 2^1 term.
  auto s = value_step(27, 1, 5);
  CHECK(s.result == 25);
  CHECK(s.kind == StepCase::clear_bit);

  // 2^4+2^2+2^0 borrows: the 2^2 term leaves, 2^1 appears.
  s = value_step(21, 1, 5);
  CHECK(s.result == 19);
  CHECK(s.kind == StepCase::borrow);

  // 2^5+2^3+2^2+2^0 under rank 2^4: the run s(3,2) grows into s(4,3).
  s = value_step(45, 4, 6);
  CHECK(s.result == 29);
  CHECK(s.kind == StepCase::borrow);
  const auto before = ComplexityValue::analyze(45, 6);
  REQUIRE(before.max_run().has_value());
  CHECK(*before.max_run() == Run{3, 2});
  const auto after = ComplexityValue::analyze(29, 6);
  CHECK(*after.max_run() == Run{4, 3});

  // Saturation below the rank.
  s = value_step(3, 2, 4);
  CHECK(s.result == 0);
  CHECK(s.kind == StepCase::borrow);
  CHECK_THROWS_AS(value_step(3, 5, 4), std::domain_error);
}

TEST_CASE("borrow rewrites the digits like a subtraction should") {
  auto rng = seeded_rng(41, 0x1);
  for (int n = 4; n <= 14; ++n) {
    for (int i = 0; i < 200; ++i) {
      const uint64_t a = 1 + rng() % (uint64_t{1} << n);
      const int k = static_cast<int>(rng() % n);
      const auto step = value_step(a, k, n);
      if ((a >> k) & 1) {
        CHECK(step.result == a - (uint64_t{1} << k));
        CHECK(step.kind == StepCase::clear_bit);
      } else if (a > (uint64_t{1} << k)) {
        // Lowest set digit above k leaves; digits k..that-1 arrive.
        const uint64_t above = a >> (k + 1) << (k + 1);
        const int b = std::countr_zero(above);
        const uint64_t added = ((uint64_t{1} << b) - 1) ^ ((uint64_t{1} << k) - 1);
        CHECK(step.result == ((a ^ (uint64_t{1} << b)) | added));
        CHECK(step.kind == StepCase::borrow);
      } else {
        CHECK(step.result == 0);
      }
    }
  }
}

TEST_CASE("ComplexityValue digit view") {
  const auto v55 = ComplexityValue::analyze(55, 6);
  CHECK(v55.nu == 5);
  CHECK(v55.runs == std::vector<Run>{{5, 2}, {2, 2}});
  CHECK(*v55.max_run() == Run{5, 2});  // topmost of the equals
  CHECK(v55.binary() == "110111");

  const auto v372 = ComplexityValue::analyze(372, 9);
  CHECK(v372.nu == 5);
  CHECK(v372.trailing_zeros == 2);
  CHECK(v372.binary() == "101110100");
  CHECK(ComplexityValue::analyze(113, 9).binary() == "001110001");
  CHECK(ComplexityValue::analyze(0, 3).binary() == "000");

  // Digit 0 never joins a run.
  const auto v = ComplexityValue::analyze(0b1011, 4);
  CHECK(v.runs == std::vector<Run>{{3, 1}, {1, 1}});
}

TEST_CASE("runs stay inside digits 1..n-1 and the view recovers the value") {
  auto rng = seeded_rng(42, 0x2);
  for (int n = 1; n <= 14; ++n) {
    for (int i = 0; i < 100; ++i) {
      const uint64_t a = rng() % ((uint64_t{1} << n) + 1);
      const auto cv = ComplexityValue::analyze(a, n);
      CHECK(cv.nu == std::popcount(a));
      uint64_t covered = 0;
      for (const Run& r : cv.runs) {
        CHECK(r.top <= n - 1);
        CHECK(r.top - r.length + 1 >= 1);
        for (int k = r.top; k > r.top - r.length; --k) {
          CHECK(((a >> k) & 1) == 1);
          covered |= uint64_t{1} << k;
        }
      }
      // Every set digit above 0 (and below n) is covered by exactly one run.
      const uint64_t inner = a & ~uint64_t{1} & ((uint64_t{1} << n) - 1);
      CHECK(covered == inner);
      // The rendered digits re-read as the value itself.
      uint64_t reread = 0;
      for (char d : cv.binary()) reread = reread * 2 + (d - '0');
      CHECK(reread == a);
    }
  }
}

TEST_CASE("min_ops on the documented values") {
  CHECK(min_ops(372, 9) == 3);
  CHECK(min_ops(55, 6) == 2);
  CHECK(min_ops(14, 4) == 1);
  CHECK(min_ops(13, 4) == 0);
  CHECK(min_ops(12, 4) == 1);
  CHECK(min_ops(11, 4) == 1);
  CHECK(min_ops(10, 4) == 1);
  CHECK(min_ops(6, 3) == 1);
  for (uint64_t f : finals_set(4)) CHECK(min_ops(f, 4) == 0);
  CHECK_THROWS_AS(min_ops(0, 4), std::domain_error);
  CHECK_THROWS_AS(min_ops(17, 4), std::domain_error);
}

TEST_CASE("plan_ranks on the documented values") {
  const auto p372 = plan_ranks(372, 9);
  CHECK(p372.subcase == Subcase::even_22);
  CHECK(p372.ranks == std::vector<uint64_t>{1, 256, 2});
  CHECK(p372.final_value == 113);
  CHECK(p372.count == 3);

  const auto p55 = plan_ranks(55, 6);
  CHECK(p55.subcase == Subcase::odd);
  CHECK(p55.ranks == std::vector<uint64_t>{4, 2});
  CHECK(p55.final_value == 49);

  const auto p12 = plan_ranks(12, 4);
  CHECK(p12.subcase == Subcase::even_21);
  CHECK(p12.ranks == std::vector<uint64_t>{4});
  CHECK(p12.final_value == 8);

  CHECK(plan_ranks(14, 4).ranks == std::vector<uint64_t>{1});
  CHECK(plan_ranks(11, 4).ranks == std::vector<uint64_t>{2});
  const auto p10 = plan_ranks(10, 4);
  CHECK(p10.ranks == std::vector<uint64_t>{1});
  CHECK(p10.final_value == 9);
  const auto p6 = plan_ranks(6, 3);
  CHECK(p6.ranks == std::vector<uint64_t>{1});
  CHECK(p6.final_value == 5);

  const auto pf = plan_ranks(13, 4);
  CHECK(pf.subcase == Subcase::already_final);
  CHECK(pf.ranks.empty());
  CHECK(pf.count == 0);
}

TEST_CASE("bfs oracle") {
  CHECK(bfs_min_ops(6, 3) == 1);
  CHECK(bfs_min_ops(372, 9) == 3);
  for (uint64_t f : finals_set(5)) CHECK(bfs_min_ops(f, 5) == 0);
  CHECK_THROWS_AS(bfs_min_ops(0, 3), std::domain_error);
}

TEST_CASE("formula equals the BFS oracle over achievable values") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(shannon_exhaustive(n).formula_matches_bfs);
  }
}

TEST_CASE("plans replay to their final value") {
  for (int n = 1; n <= 10; ++n) {
    for (uint64_t a = (uint64_t{1} << (n - 1)) + 1; a <= (uint64_t{1} << n);
         ++a) {
      const auto plan = plan_ranks(a, n);
      CHECK(plan.count == min_ops(a, n));
      uint64_t cur = a;
      for (uint64_t rank : plan.ranks) {
        cur = value_step(cur, std::countr_zero(rank), n).result;
      }
      CHECK(cur == plan.final_value);
      CHECK(is_final(cur, n));
      if (plan.subcase == Subcase::odd) {
        CHECK(std::count(plan.ranks.begin(), plan.ranks.end(), 1) == 0);
        const std::set<uint64_t> distinct(plan.ranks.begin(),
                                          plan.ranks.end());
        CHECK(distinct.size() == plan.ranks.size());
      }
    }
  }
}

TEST_CASE("shannon_bound is the exact integer floor") {
  CHECK(shannon_bound(5) == std::pair<int, int>{1, 2});
  CHECK(shannon_bound(9) == std::pair<int, int>{4, 5});
  CHECK(shannon_bound(16) == std::pair<int, int>{9, 10});

  // b = floor(n - 2*sqrt(n) + 1) iff 4n <= (n+1-b)^2 and 4n > (n-b)^2.
  for (int64_t n = 1; n <= 4096; ++n) {
    const int64_t b = shannon_bound(static_cast<int>(n)).first;
    CHECK(4 * n <= (n + 1 - b) * (n + 1 - b));
    CHECK(4 * n > (n - b) * (n - b));
    CHECK(shannon_bound(static_cast<int>(n)).second == b + 1);
  }
}

TEST_CASE("shannon_exhaustive rows at small widths") {
  const auto r3 = shannon_exhaustive(3);
  CHECK(r3.max_odd == 0);
  CHECK(r3.max_even == 1);
  CHECK(r3.witness_even == 6);

  const auto r4 = shannon_exhaustive(4);
  CHECK(r4.max_odd == 1);
  CHECK(r4.max_even == 1);

  const auto r5 = shannon_exhaustive(5);
  CHECK(r5.max_odd == 1);
  CHECK(r5.bound_odd == 1);
  CHECK(r5.max_even == 2);
  CHECK(r5.bound_even == 2);
}
