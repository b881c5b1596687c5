#include "tas/tardy.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <numeric>

#include "tas/parallel.hpp"
#include "tas/subroutines.hpp"

namespace tas {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

struct OrderOutcome {
  std::optional<Schedule> witness;
  int64_t plans = 0;
  int64_t moore_calls = 0;
};

// Evaluates one agent-2 order of solve_u_wc: enumerates every BlockPlan and
// composes per-block Moore results with threaded offsets. Stops at the first
// feasible plan (lexicographic plan order).
OrderOutcome evaluate_u_wc_order(const Instance& inst, const std::vector<int>& edd,
                                 const std::vector<int>& order, int64_t e_sum) {
  const int n = inst.n();
  const int k = inst.k();
  OrderOutcome out;

  std::vector<int> splits(k, 0);
  std::vector<int64_t> early(k + 1, 0);

  // Block i covers EDD positions [lo_i, hi_i); returns feasibility of the
  // fully specified plan and fills the witness on success.
  auto run_plan = [&]() -> bool {
    ++out.plans;
    std::vector<JobRef> seq;
    std::vector<JobRef> deferred;
    int64_t offset = 0;
    int64_t cost2 = 0;
    for (int i = 0; i <= k; ++i) {
      const int lo = i == 0 ? 0 : splits[i - 1];
      const int hi = i == k ? n : splits[i];
      std::vector<Job> block;
      block.reserve(hi - lo);
      for (int pos = lo; pos < hi; ++pos) block.push_back(inst.jobs1[edd[pos]]);
      ++out.moore_calls;
      auto moore = moore_hodgson_offset(block, offset, static_cast<int>(early[i]));
      if (!moore) return false;
      std::vector<bool> kept(block.size(), false);
      for (int local : moore->early) kept[local] = true;
      for (size_t local = 0; local < block.size(); ++local) {
        (kept[local] ? seq : deferred).push_back({1, edd[lo + static_cast<int>(local)]});
      }
      offset = moore->makespan;
      if (i < k) {
        const Job& j2 = inst.jobs2[order[i]];
        offset = checked_add(offset, j2.p);
        cost2 = checked_add(cost2, checked_mul(j2.w, offset));
        if (cost2 > inst.a2) return false;
        seq.push_back({2, order[i]});
      }
    }
    seq.insert(seq.end(), deferred.begin(), deferred.end());
    auto schedule = normalize_left_shift(inst, seq, {});
    if (!schedule) return false;
    // Global re-verification: block-local earliness plus the deferred tail
    // must actually meet both bounds.
    if (!is_feasible_schedule(*schedule, inst)) return false;
    out.witness = std::move(*schedule);
    return true;
  };

  // Nested enumeration: split points (non-decreasing), then per-block early
  // counts summing to exactly e_sum.
  auto enum_early = [&](auto&& self, int block, int64_t remaining) -> bool {
    const int lo = block == 0 ? 0 : splits[block - 1];
    const int hi = block == k ? n : splits[block];
    const int64_t size = hi - lo;
    if (block == k) {
      if (remaining > size) return false;
      early[block] = remaining;
      return run_plan();
    }
    for (int64_t e = 0; e <= std::min<int64_t>(size, remaining); ++e) {
      early[block] = e;
      if (self(self, block + 1, remaining - e)) return true;
    }
    return false;
  };
  auto enum_splits = [&](auto&& self, int idx, int from) -> bool {
    if (idx == k) return enum_early(enum_early, 0, e_sum);
    for (int s = from; s <= n; ++s) {
      splits[idx] = s;
      if (self(self, idx + 1, s)) return true;
    }
    return false;
  };
  enum_splits(enum_splits, 0, 0);
  return out;
}

SolveOutcome solve_u_wc_orders(const Instance& inst, const SolveOptions& options,
                               std::vector<std::vector<int>> orders) {
  require(inst.crit1.kind == CriterionKind::WeightedTardyCount &&
              inst.crit2.kind == CriterionKind::TotalWeightedCompletion,
          "solve_u_wc: needs tardy count vs completion time");
  for (const Job& j : inst.jobs1) {
    require(j.w == 1, "solve_u_wc: agent-1 weights must be 1");
    require(j.d.has_value(), "solve_u_wc: agent-1 due dates required");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto edd = edd_order(inst.jobs1);
  // All agent-1 jobs may be tardy once A1 >= n, so cap the deferred count.
  const int64_t e_sum = inst.n() - std::min<int64_t>(inst.a1, inst.n());

  std::vector<OrderOutcome> results(orders.size());
  auto hit = first_hit(orders.size(), options.parallel, [&](size_t i) {
    results[i] = evaluate_u_wc_order(inst, edd, orders[i], e_sum);
    return results[i].witness.has_value();
  });

  SolveOutcome out;
  for (const OrderOutcome& r : results) {
    out.stats.subproblems += r.plans;
    out.stats.nodes += r.moore_calls;
  }
  if (hit) {
    out.feasible = true;
    out.witness = std::move(results[*hit].witness);
    assert(is_feasible_schedule(*out.witness, inst));
  }
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::vector<std::vector<int>> permutations_of(int k) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Shared 2^k tardy-subset loop for the tardy-vs-tardy solvers. `attempt`
// receives the early indices (ascending) and returns a witness.
template <typename Attempt>
SolveOutcome tardy_subset_search(const Instance& inst, const SolveOptions& options,
                                 Attempt&& attempt) {
  const auto t0 = std::chrono::steady_clock::now();
  const int k = inst.k();

  std::vector<uint32_t> masks;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    int64_t tardy_weight = 0;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) tardy_weight = checked_add(tardy_weight, inst.jobs2[j].w);
    }
    if (tardy_weight <= inst.a2) masks.push_back(mask);
  }

  std::vector<std::optional<Schedule>> found(masks.size());
  std::atomic<int64_t> tried{0};
  auto hit = first_hit(masks.size(), options.parallel, [&](size_t i) {
    tried.fetch_add(1);
    std::vector<int> early_idx;
    for (int j = 0; j < k; ++j) {
      if (!(masks[i] & (1u << j))) early_idx.push_back(j);
    }
    found[i] = attempt(masks[i], early_idx);
    return found[i].has_value();
  });

  SolveOutcome out;
  if (hit) {
    out.feasible = true;
    out.witness = std::move(found[*hit]);
    assert(is_feasible_schedule(*out.witness, inst));
  }
  out.stats.subproblems = tried.load();
  out.stats.nodes = tried.load();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

SolveOutcome solve_u_wc(const Instance& inst, const SolveOptions& options) {
  return solve_u_wc_orders(inst, options, permutations_of(inst.k()));
}

SolveOutcome solve_u_c(const Instance& inst, const SolveOptions& options) {
  for (const Job& j : inst.jobs2) require(j.w == 1, "solve_u_c: agent-2 weights must be 1");
  // With unit agent-2 weights the SPT order of agent 2 is the only one tried.
  return solve_u_wc_orders(inst, options, {spt_order(inst.jobs2)});
}

SolveOutcome solve_u_wu(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::WeightedTardyCount &&
              inst.crit2.kind == CriterionKind::WeightedTardyCount,
          "solve_u_wu: needs tardy counts on both agents");
  for (const Job& j : inst.jobs1) {
    require(j.w == 1, "solve_u_wu: agent-1 weights must be 1");
    require(j.d.has_value(), "solve_u_wu: due dates required");
  }
  for (const Job& j : inst.jobs2) require(j.d.has_value(), "solve_u_wu: due dates required");

  return tardy_subset_search(
      inst, options,
      [&](uint32_t mask, const std::vector<int>& early_idx) -> std::optional<Schedule> {
        std::vector<int> chain_idx = early_idx;
        std::sort(chain_idx.begin(), chain_idx.end(), [&](int a, int b) {
          if (*inst.jobs2[a].d != *inst.jobs2[b].d) return *inst.jobs2[a].d < *inst.jobs2[b].d;
          return inst.jobs2[a].id < inst.jobs2[b].id;
        });
        std::vector<Job> chain;
        for (int j : chain_idx) chain.push_back(inst.jobs2[j]);

        auto res = max_early_count_with_mandatory(inst.jobs1, chain);
        if (!res || inst.n() - res->early_count > inst.a1) return std::nullopt;

        std::vector<JobRef> seq;
        for (const JobRef& r : res->sequence) {
          seq.push_back(r.agent == 1 ? r : JobRef{2, chain_idx[r.index]});
        }
        for (int j = 0; j < inst.k(); ++j) {
          if (mask & (1u << j)) seq.push_back({2, j});
        }
        auto schedule = normalize_left_shift(inst, seq, {});
        if (!schedule || !is_feasible_schedule(*schedule, inst)) return std::nullopt;
        return schedule;
      });
}

SolveOutcome solve_wu_wu_unitp(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::WeightedTardyCount &&
              inst.crit2.kind == CriterionKind::WeightedTardyCount,
          "solve_wu_wu_unitp: needs tardy counts on both agents");
  for (int agent : {1, 2}) {
    for (const Job& j : inst.jobs(agent)) {
      require(j.p == 1, "solve_wu_wu_unitp: all processing times must be 1");
      require(j.d.has_value(), "solve_wu_wu_unitp: due dates required");
    }
  }
  int64_t total_w1 = 0;
  for (const Job& j : inst.jobs1) total_w1 = checked_add(total_w1, j.w);

  return tardy_subset_search(
      inst, options,
      [&](uint32_t, const std::vector<int>& early_idx) -> std::optional<Schedule> {
        std::vector<Job> chain;
        for (int j : early_idx) chain.push_back(inst.jobs2[j]);
        auto res = unit_time_max_wearly(inst.jobs1, chain);
        if (!res || total_w1 - res->early_weight > inst.a1) return std::nullopt;

        Schedule schedule;
        std::vector<bool> used1(inst.jobs1.size(), false), used2(inst.jobs2.size(), false);
        for (auto [ref, slot] : res->placed) {
          JobRef actual = ref.agent == 1 ? ref : JobRef{2, early_idx[ref.index]};
          schedule.entries.push_back({actual, slot});
          (actual.agent == 1 ? used1 : used2)[actual.index] = true;
        }
        int64_t t = static_cast<int64_t>(inst.jobs1.size() + inst.jobs2.size());
        for (int agent : {1, 2}) {
          auto& used = agent == 1 ? used1 : used2;
          for (size_t i = 0; i < used.size(); ++i) {
            if (!used[i]) schedule.entries.push_back({{agent, static_cast<int>(i)}, t++});
          }
        }
        if (!is_feasible_schedule(schedule, inst)) return std::nullopt;
        return schedule;
      });
}

}  // namespace tas
