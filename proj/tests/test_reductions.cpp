#include <doctest.h>

#include <algorithm>

#include "tas/driver.hpp"
#include "tas/io.hpp"
#include "tas/jit.hpp"
#include "tas/oracle.hpp"
#include "tas/reductions.hpp"
#include "testutil.hpp"

using namespace tas;

TEST_CASE("solve_partition: basics") {
  CHECK(solve_partition(PartitionInstance{{1, 1, 2}}));
  CHECK_FALSE(solve_partition(PartitionInstance{{1, 1, 4}}));
  CHECK(solve_partition(PartitionInstance{{2, 2}}));
  CHECK(solve_partition(PartitionInstance{{}}));  // empty split: 0 = 0
  CHECK_THROWS_AS(solve_partition(PartitionInstance{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(solve_partition(PartitionInstance{{0, 2}}), std::invalid_argument);
}

TEST_CASE("reduce_thm1: bound formula and shape") {
  Instance a = reduce_thm1(PartitionInstance{{1, 1, 2}}, Thm1Variant::SumCompletion);
  CHECK(a.a1 == 13);  // 2 + (16 + 6) / 2
  CHECK(a.a2 == 3);
  CHECK(a.k() == 1);
  CHECK(a.jobs2[0].w == 1);
  CHECK_FALSE(a.jobs2[0].d.has_value());

  Instance b = reduce_thm1(PartitionInstance{{2, 2}}, Thm1Variant::TardyCount);
  CHECK(b.a1 == 14);  // 2 + (16 + 8) / 2
  CHECK(b.a2 == 0);
  CHECK(b.jobs2[0].d == 3);

  Instance c = reduce_thm1(PartitionInstance{{2, 2}}, Thm1Variant::JitCount);
  CHECK(c.a2 == 1);
  CHECK(c.crit2.kind == CriterionKind::WeightedJitCount);
  CHECK(c.jobs2[0].d == 3);
}

TEST_CASE("reduce_thm1: A1 is order-invariant and matches the literal double sum") {
  SplitMix64 rng(1912);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(rng.range(1, 6));
    std::vector<int64_t> xs;
    int64_t sum = 0;
    for (int i = 0; i < m; ++i) {
      xs.push_back(rng.range(1, 6));
      sum += xs.back();
    }
    if (sum % 2 != 0) xs.push_back(sum % 2), sum += sum % 2;

    // Literal double sum over the given order.
    int64_t literal = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      for (size_t j = 0; j <= i; ++j) literal += xs[i] * xs[j];
    }
    const int64_t expect = sum / 2 + literal;
    CHECK(reduce_thm1(PartitionInstance{xs}, Thm1Variant::SumCompletion).a1 == expect);

    std::vector<int64_t> shuffled = xs;
    for (size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[static_cast<size_t>(rng.range(0, i - 1))]);
    }
    CHECK(reduce_thm1(PartitionInstance{shuffled}, Thm1Variant::SumCompletion).a1 == expect);
  }
}

TEST_CASE("reduce_thm10: paired unit jobs with shared due dates") {
  Instance inst = reduce_thm10(PartitionInstance{{1, 1, 2}});
  CHECK(inst.n() == 3);
  CHECK(inst.k() == 3);
  CHECK(inst.a1 == 2);
  CHECK(inst.a2 == 2);
  for (int j = 0; j < 3; ++j) {
    CHECK(*inst.jobs1[j].d == j + 1);
    CHECK(*inst.jobs2[j].d == j + 1);
    CHECK(inst.jobs1[j].w == inst.jobs2[j].w);
    CHECK(inst.jobs1[j].p == 1);
  }
}

TEST_CASE("reductions: ground truth matches solvers on small multisets") {
  // Every even-sum multiset with m <= 4 and values <= 4: partition verdict
  // versus the routed pipeline on each construction. The acceptance suite
  // runs the full m <= 8 family; this is the fast regression slice.
  std::function<void(std::vector<int64_t>&, int64_t, int64_t)> rec =
      [&](std::vector<int64_t>& xs, int64_t from, int64_t remaining_slots) {
        if (!xs.empty()) {
          int64_t sum = 0;
          for (int64_t x : xs) sum += x;
          if (sum % 2 == 0) {
            PartitionInstance pi{xs};
            const bool expect = solve_partition(pi);
            OracleBudget budget;
            budget.max_total_jobs = 9;
            for (Thm1Variant v : {Thm1Variant::SumCompletion, Thm1Variant::TardyCount,
                                  Thm1Variant::JitCount}) {
              Instance inst = reduce_thm1(pi, v);
              CHECK(brute_force_feasible(inst, budget).feasible == expect);
            }
            CHECK(solve_we_we(reduce_thm10(pi)).feasible == expect);
          }
        }
        if (remaining_slots == 0) return;
        for (int64_t x = from; x <= 4; ++x) {
          xs.push_back(x);
          rec(xs, x, remaining_slots - 1);
          xs.pop_back();
        }
      };
  std::vector<int64_t> xs;
  rec(xs, 1, 4);
}
