#include "tas/completion.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <numeric>

#include "tas/parallel.hpp"
#include "tas/subroutines.hpp"

namespace tas {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::vector<std::vector<int>> all_orders(int k) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Schedule realize_interleaving(const Instance& inst, std::span<const int> agent1_order,
                              std::span<const int> agent2_order,
                              const std::vector<int64_t>& before_counts) {
  std::vector<JobRef> seq;
  seq.reserve(inst.n() + inst.k());
  int placed = 0;
  for (size_t j = 0; j < agent2_order.size(); ++j) {
    while (placed < before_counts[j]) seq.push_back({1, agent1_order[placed++]});
    seq.push_back({2, agent2_order[j]});
  }
  while (placed < inst.n()) seq.push_back({1, agent1_order[placed++]});
  auto schedule = normalize_left_shift(inst, seq, {});
  assert(schedule.has_value());
  return std::move(*schedule);
}

int64_t assignment_value(const IntAssignment& a, int j) {
  return a.values.at("x_" + std::to_string(j + 1));
}

struct OrderSearchResult {
  std::optional<Schedule> witness;
  int64_t nodes = 0;
  int64_t orders_tried = 0;
};

// Shared k!-loop over agent-2 orders; `attempt` returns a witness when the
// order admits a feasible interleaving.
template <typename Attempt>
SolveOutcome order_search(const Instance& inst, const SolveOptions& options,
                          Attempt&& attempt) {
  const auto t0 = std::chrono::steady_clock::now();
  auto orders = all_orders(inst.k());

  std::vector<std::optional<Schedule>> found(orders.size());
  std::atomic<int64_t> nodes{0};
  std::atomic<int64_t> tried{0};
  auto hit = first_hit(orders.size(), options.parallel, [&](size_t i) {
    int64_t local_nodes = 0;
    found[i] = attempt(orders[i], local_nodes);
    nodes.fetch_add(local_nodes);
    tried.fetch_add(1);
    return found[i].has_value();
  });

  SolveOutcome out;
  if (hit) {
    out.feasible = true;
    out.witness = std::move(found[*hit]);
    assert(is_feasible_schedule(*out.witness, inst));
  }
  out.stats.nodes = nodes.load();
  out.stats.subproblems = tried.load();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

Schedule realize_cc_witness(const Instance& inst, std::span<const int> agent2_order,
                            const IntAssignment& assignment) {
  // x_j = number of agent-1 jobs scheduled before the j-th agent-2 job.
  auto spt = spt_order(inst.jobs1);
  std::vector<int64_t> before(agent2_order.size());
  for (size_t j = 0; j < agent2_order.size(); ++j) before[j] = assignment_value(assignment, j);
  return realize_interleaving(inst, spt, agent2_order, before);
}

Schedule realize_unitp_witness(const Instance& inst, std::span<const int> agent2_order,
                               const IntAssignment& assignment) {
  // x_j counts agent-1 jobs scheduled after the j-th agent-2 job instead.
  auto worder = weight_desc_order(inst.jobs1);
  std::vector<int64_t> before(agent2_order.size());
  for (size_t j = 0; j < agent2_order.size(); ++j) {
    before[j] = inst.n() - assignment_value(assignment, j);
  }
  return realize_interleaving(inst, worder, agent2_order, before);
}

SolveOutcome solve_c_wc(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::TotalWeightedCompletion &&
              inst.crit2.kind == CriterionKind::TotalWeightedCompletion,
          "solve_c_wc: needs completion-time criteria for both agents");
  for (const Job& j : inst.jobs1) require(j.w == 1, "solve_c_wc: agent-1 weights must be 1");

  return order_search(inst, options, [&](const std::vector<int>& order, int64_t& nodes)
                          -> std::optional<Schedule> {
    MilpModel model = build_cc_model(inst, order);
    MilpSolveResult res = solve_feasibility(model);
    nodes += res.stats.nodes;
    if (!res.assignment) return std::nullopt;
    return realize_cc_witness(inst, order, *res.assignment);
  });
}

SolveOutcome solve_wc_wc_unitp(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::TotalWeightedCompletion &&
              inst.crit2.kind == CriterionKind::TotalWeightedCompletion,
          "solve_wc_wc_unitp: needs completion-time criteria for both agents");
  for (const Job& j : inst.jobs1) {
    require(j.p == 1, "solve_wc_wc_unitp: agent-1 processing times must be 1");
  }

  return order_search(inst, options, [&](const std::vector<int>& order, int64_t& nodes)
                          -> std::optional<Schedule> {
    MilpModel model = build_unitp_model(inst, order);
    MilpSolveResult res = solve_feasibility(model);
    nodes += res.stats.nodes;
    if (!res.assignment) return std::nullopt;
    return realize_unitp_witness(inst, order, *res.assignment);
  });
}

SolveOutcome solve_c_wu(const Instance& inst, const SolveOptions& options) {
  require(inst.crit1.kind == CriterionKind::TotalWeightedCompletion &&
              inst.crit2.kind == CriterionKind::WeightedTardyCount,
          "solve_c_wu: needs completion time vs tardy count");
  for (const Job& j : inst.jobs1) require(j.w == 1, "solve_c_wu: agent-1 weights must be 1");
  for (const Job& j : inst.jobs2) require(j.d.has_value(), "solve_c_wu: agent-2 due dates");

  const auto t0 = std::chrono::steady_clock::now();
  const int k = inst.k();

  // Candidate tardy sets, cheapest tardy weight first so a hit tends to keep
  // slack on the agent-2 bound; a pure heuristic with no correctness impact.
  struct Candidate {
    uint32_t mask;
    int64_t tardy_weight;
  };
  std::vector<Candidate> candidates;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    int64_t tw = 0;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) tw = checked_add(tw, inst.jobs2[j].w);
    }
    if (tw <= inst.a2) candidates.push_back({mask, tw});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.tardy_weight < b.tardy_weight;
                   });

  std::vector<std::optional<Schedule>> found(candidates.size());
  std::atomic<int64_t> tried{0};
  auto hit = first_hit(candidates.size(), options.parallel, [&](size_t ci) {
    tried.fetch_add(1);
    const uint32_t mask = candidates[ci].mask;
    std::vector<int> early_idx;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) early_idx.push_back(j);
    }
    // EDD order within the early chain.
    std::sort(early_idx.begin(), early_idx.end(), [&](int a, int b) {
      if (*inst.jobs2[a].d != *inst.jobs2[b].d) return *inst.jobs2[a].d < *inst.jobs2[b].d;
      return inst.jobs2[a].id < inst.jobs2[b].id;
    });
    std::vector<Job> chain;
    chain.reserve(early_idx.size());
    for (int j : early_idx) chain.push_back(inst.jobs2[j]);

    auto res = min_sumc_with_mandatory_early(inst.jobs1, chain);
    if (!res || res->agent1_sum_completion > inst.a1) return false;

    std::vector<JobRef> seq;
    for (const JobRef& r : res->sequence) {
      seq.push_back(r.agent == 1 ? r : JobRef{2, early_idx[r.index]});
    }
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) seq.push_back({2, j});
    }
    auto schedule = normalize_left_shift(inst, seq, {});
    if (!schedule || !is_feasible_schedule(*schedule, inst)) return false;
    found[ci] = std::move(*schedule);
    return true;
  });

  SolveOutcome out;
  if (hit) {
    out.feasible = true;
    out.witness = std::move(found[*hit]);
  }
  out.stats.subproblems = tried.load();
  out.stats.nodes = tried.load();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace tas
