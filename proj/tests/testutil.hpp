#ifndef TAS_TESTS_TESTUTIL_HPP
#define TAS_TESTS_TESTUTIL_HPP

// Shared test instruments: instance builders, a second fully independent
// start-time oracle, normal-form witness searches for the exchange-rule
// checks, and direct recomputations of the gap-packing DP states. Everything
// here is deliberately written as plain enumeration, independent of the
// solver code paths it validates.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tas/core.hpp"
#include "tas/jit.hpp"
#include "tas/milp.hpp"

namespace tastest {

using namespace tas;

inline Job J(int id, int agent, int64_t p, int64_t w = 1,
             std::optional<int64_t> d = std::nullopt) {
  Job j;
  j.id = id;
  j.agent = agent;
  j.p = p;
  j.w = w;
  j.d = d;
  return j;
}

inline Instance make_instance(CriterionKind k1, int64_t a1, CriterionKind k2, int64_t a2,
                              std::vector<Job> jobs1, std::vector<Job> jobs2) {
  Instance inst;
  inst.crit1 = {k1};
  inst.crit2 = {k2};
  inst.a1 = a1;
  inst.a2 = a2;
  inst.jobs1 = std::move(jobs1);
  inst.jobs2 = std::move(jobs2);
  return inst;
}

// ---------------------------------------------------------------------------
// Paper-form left-hand sides of the two agent bound rows of an interleaving
// model: the first sits right after the x bounds and the chain, the second is
// the final constraint; both are shifted back by the constants the builder
// folded into the right-hand side. nullopt when a row is missing (malformed
// model), which callers treat as a failure.

inline std::optional<std::pair<int64_t, int64_t>> interleaving_bound_values(
    const MilpModel& m, const IntAssignment& a, int k, int64_t first_bound,
    int64_t second_bound) {
  const int first_idx = k == 0 ? 0 : 2 * k - 1;
  const int second_idx = static_cast<int>(m.constraints.size()) - 1;
  std::optional<int64_t> first, second;
  for (const auto& row : tight_check_row_values(m, a)) {
    if (row.constraint_index == first_idx) {
      first = row.lhs + (first_bound - m.constraints[first_idx].rhs.num);
    }
    if (row.constraint_index == second_idx) {
      second = row.lhs + (second_bound - m.constraints[second_idx].rhs.num);
    }
  }
  if (!first || !second) return std::nullopt;
  return std::make_pair(*first, *second);
}

// ---------------------------------------------------------------------------
// Secondary oracle: permutations x all integer start times. Exponentially
// more expensive than the canonical-layout oracle, usable for n + k <= 4;
// validates the two-choice start-time discretization itself.

inline bool all_start_times_rec(const Instance& inst, std::vector<JobRef>& remaining,
                                Schedule& partial, int64_t free_at, int64_t horizon) {
  if (remaining.empty()) return is_feasible_schedule(partial, inst);
  for (size_t i = 0; i < remaining.size(); ++i) {
    JobRef ref = remaining[i];
    remaining.erase(remaining.begin() + i);
    const Job& job = inst.jobs(ref.agent)[ref.index];
    for (int64_t start = free_at; start + job.p <= horizon; ++start) {
      partial.entries.push_back({ref, start});
      if (all_start_times_rec(inst, remaining, partial, start + job.p, horizon)) {
        partial.entries.pop_back();
        remaining.insert(remaining.begin() + i, ref);
        return true;
      }
      partial.entries.pop_back();
    }
    remaining.insert(remaining.begin() + i, ref);
  }
  return false;
}

inline bool all_start_times_feasible(const Instance& inst) {
  std::vector<JobRef> remaining;
  for (int i = 0; i < inst.n(); ++i) remaining.push_back({1, i});
  for (int j = 0; j < inst.k(); ++j) remaining.push_back({2, j});
  int64_t max_d = 0;
  for (int agent : {1, 2}) {
    for (const Job& j : inst.jobs(agent)) max_d = std::max(max_d, j.d.value_or(0));
  }
  const int64_t horizon = inst.total_p() + max_d;
  Schedule partial;
  return all_start_times_rec(inst, remaining, partial, 0, std::max<int64_t>(horizon, 1));
}

// ---------------------------------------------------------------------------
// Normal-form witness searches. Each enumerates only schedules of the
// restricted shape and reports whether any is feasible.

// All interleavings of two fixed chains, each chain's internal order kept.
inline bool merge_chains_feasible(
    const Instance& inst, const std::vector<JobRef>& chain_a,
    const std::vector<JobRef>& chain_b, const std::vector<JobRef>& tail,
    const std::vector<JobRef>& designated) {
  std::vector<JobRef> seq(chain_a.size() + chain_b.size() + tail.size());
  std::function<bool(size_t, size_t)> rec = [&](size_t ia, size_t ib) -> bool {
    const size_t at = ia + ib;
    if (ia == chain_a.size() && ib == chain_b.size()) {
      std::copy(tail.begin(), tail.end(), seq.begin() + at);
      auto schedule = normalize_left_shift(inst, seq, designated);
      return schedule && is_feasible_schedule(*schedule, inst);
    }
    if (ia < chain_a.size()) {
      seq[at] = chain_a[ia];
      if (rec(ia + 1, ib)) return true;
    }
    if (ib < chain_b.size()) {
      seq[at] = chain_b[ib];
      if (rec(ia, ib + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline std::vector<JobRef> refs_of(int agent, const std::vector<int>& indices) {
  std::vector<JobRef> refs;
  for (int i : indices) refs.push_back({agent, i});
  return refs;
}

inline std::vector<std::vector<int>> all_perms(int k) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Agent-1 kept in a fixed chain order, agent-2 arranged freely.
inline bool chain1_normal_form_feasible(const Instance& inst,
                                        const std::vector<int>& chain1_order) {
  for (const auto& perm : all_perms(inst.k())) {
    if (merge_chains_feasible(inst, refs_of(1, chain1_order), refs_of(2, perm), {}, {})) {
      return true;
    }
  }
  return false;
}

inline bool spt_normal_form_feasible(const Instance& inst) {
  return chain1_normal_form_feasible(inst, spt_order(inst.jobs1));
}

inline bool weight_desc_normal_form_feasible(const Instance& inst) {
  return chain1_normal_form_feasible(inst, weight_desc_order(inst.jobs1));
}

inline std::vector<int> edd_sorted_subset(const std::vector<Job>& jobs,
                                          const std::vector<int>& subset) {
  std::vector<int> order = subset;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (*jobs[a].d != *jobs[b].d) return *jobs[a].d < *jobs[b].d;
    return jobs[a].id < jobs[b].id;
  });
  return order;
}

inline void for_each_subset(int k, const std::function<void(const std::vector<int>&,
                                                            const std::vector<int>&)>& fn) {
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> in, out;
    for (int j = 0; j < k; ++j) {
      (mask & (1u << j) ? in : out).push_back(j);
    }
    fn(in, out);
  }
}

// Agent-1 SPT chain, an EDD chain over each candidate agent-2 early set,
// remaining agent-2 jobs last.
inline bool structure_normal_form_feasible(const Instance& inst) {
  bool found = false;
  for_each_subset(inst.k(), [&](const std::vector<int>& early, const std::vector<int>& tardy) {
    if (found) return;
    found = merge_chains_feasible(inst, refs_of(1, spt_order(inst.jobs1)),
                                  refs_of(2, edd_sorted_subset(inst.jobs2, early)),
                                  refs_of(2, tardy), {});
  });
  return found;
}

// Early jobs of both agents first in one merged EDD pass, tardy sets last.
inline bool structure2_normal_form_feasible(const Instance& inst) {
  bool found = false;
  for_each_subset(inst.n(), [&](const std::vector<int>& e1, const std::vector<int>& t1) {
    if (found) return;
    for_each_subset(inst.k(), [&](const std::vector<int>& e2, const std::vector<int>& t2) {
      if (found) return;
      std::vector<JobRef> tail = refs_of(1, t1);
      auto tail2 = refs_of(2, t2);
      tail.insert(tail.end(), tail2.begin(), tail2.end());
      found = merge_chains_feasible(inst, refs_of(1, edd_sorted_subset(inst.jobs1, e1)),
                                    refs_of(2, edd_sorted_subset(inst.jobs2, e2)), tail, {});
    });
  });
  return found;
}

// Exactly min(A1, n) deferred agent-1 jobs; the early rest in an EDD chain
// interleaved with any agent-2 arrangement, deferred jobs last.
inline bool structure3_normal_form_feasible(const Instance& inst) {
  const int defer = static_cast<int>(std::min<int64_t>(inst.a1, inst.n()));
  bool found = false;
  for_each_subset(inst.n(), [&](const std::vector<int>& tardy, const std::vector<int>& early) {
    if (found || static_cast<int>(tardy.size()) != defer) return;
    for (const auto& perm : all_perms(inst.k())) {
      if (merge_chains_feasible(inst, refs_of(1, edd_sorted_subset(inst.jobs1, early)),
                                refs_of(2, perm), refs_of(1, tardy), {})) {
        found = true;
        return;
      }
    }
  });
  return found;
}

// Exactly A1 agent-1 jobs pinned just-in-time (EDD order), the rest last.
inline bool jit1_normal_form_feasible(const Instance& inst) {
  if (inst.a1 > inst.n()) return false;
  bool found = false;
  for_each_subset(inst.n(), [&](const std::vector<int>& jit, const std::vector<int>& rest) {
    if (found || static_cast<int>(jit.size()) != inst.a1) return;
    for (int i : jit) {
      if (!inst.jobs1[i].jit_possible()) return;
    }
    auto chain = refs_of(1, edd_sorted_subset(inst.jobs1, jit));
    for (const auto& perm : all_perms(inst.k())) {
      if (merge_chains_feasible(inst, chain, refs_of(2, perm), refs_of(1, rest), chain)) {
        found = true;
        return;
      }
    }
  });
  return found;
}

// ---------------------------------------------------------------------------
// Direct recomputation of the gap-packing DP states: enumerate every pin
// chain ending at b, simulate the maximal packing per gap by scanning (no
// shared arithmetic with k_abl/w_abl), and aggregate the reachable states.

struct PrefixStates {
  // (b, e, l) -> min agent-2 weighted completion.
  std::vector<std::vector<std::vector<std::optional<int64_t>>>> min_wc;
  // (b, l) -> max agent-1 JIT weight with all packed agent-2 jobs early.
  std::vector<std::vector<std::optional<int64_t>>> max_jit;
};

inline PrefixStates recompute_prefix_states(const JitDpContext& ctx, int max_e) {
  PrefixStates out;
  const int n = ctx.n, k = ctx.k;
  out.min_wc.assign(n + 2, std::vector<std::vector<std::optional<int64_t>>>(
                               max_e + 1, std::vector<std::optional<int64_t>>(k + 1)));
  out.max_jit.assign(n + 2, std::vector<std::optional<int64_t>>(k + 1));

  // Chains of pins 0 = c_0 < c_1 < ... < c_m; extend recursively.
  std::function<void(std::vector<int>&, int, int64_t, int64_t, bool)> extend =
      [&](std::vector<int>& chain, int packed, int64_t cost, int64_t jit_weight,
          bool all_packed_early) {
        const int b = chain.back();
        const int real_pins = static_cast<int>(chain.size()) - 1 -
                              (b == n + 1 ? 1 : 0);
        if (real_pins <= max_e) {
          auto& cell = out.min_wc[b][real_pins][packed];
          if (!cell || cost < *cell) cell = cost;
        }
        if (all_packed_early) {
          auto& cell = out.max_jit[b][packed];
          if (!cell || jit_weight > *cell) cell = jit_weight;
        }
        if (b == n + 1) return;
        for (int next = b + 1; next <= n + 1; ++next) {
          const int64_t gap = ctx.d1[next] - ctx.d1[b] - ctx.p1[next];
          if (gap < 0) continue;
          // Maximal packing by direct simulation.
          int64_t used = 0, seg_cost = 0;
          int took = 0;
          bool seg_early = true;
          while (packed + took < k && used + ctx.p2_prefix[packed + took + 1] -
                                              ctx.p2_prefix[packed + took] <=
                                          gap) {
            const int job = packed + took + 1;
            used += ctx.p2_prefix[job] - ctx.p2_prefix[job - 1];
            const int64_t completion = ctx.d1[b] + used;
            seg_cost += ctx.w2[job] * completion;
            if (ctx.d2[job] < 0 || completion > ctx.d2[job]) seg_early = false;
            ++took;
          }
          chain.push_back(next);
          extend(chain, packed + took, cost + seg_cost, jit_weight + ctx.w1[next],
                 all_packed_early && seg_early);
          chain.pop_back();
        }
      };
  std::vector<int> chain{0};
  extend(chain, 0, 0, 0, true);
  return out;
}

}  // namespace tastest

#endif  // TAS_TESTS_TESTUTIL_HPP
