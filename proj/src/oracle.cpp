#include "tas/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <set>

namespace tas {

namespace {

struct SeqItem {
  JobRef job;
  bool pinned;   // finishes exactly at its due date
  int64_t start;
};

// Shared depth-first enumeration over canonical layouts. `mode` selects what
// happens at a leaf; pruning rules depend on the mode.
struct Enumerator {
  const Instance& inst;
  const OracleBudget& budget;

  std::vector<const Job*> all;      // flattened jobs, agent 1 then agent 2
  std::vector<JobRef> refs;
  std::vector<int> prev_identical;  // index into `all`, or -1
  std::vector<bool> used;
  std::vector<SeqItem> seq;
  int64_t free_at = 0;
  int64_t leaves = 0;

  // Partial criterion values of the scheduled prefix.
  int64_t v1 = 0;
  int64_t v2 = 0;

  // Feasibility mode: stop at the first layout meeting both bounds.
  bool check_bounds = false;
  std::optional<Schedule> witness;

  // Optimal mode: best fix_agent value subject to the other agent's bound.
  int fix_agent = 0;
  std::optional<int64_t> best;

  // Value-pair collection mode.
  std::set<std::pair<int64_t, int64_t>>* pairs = nullptr;

  explicit Enumerator(const Instance& inst_, const OracleBudget& budget_)
      : inst(inst_), budget(budget_) {
    const int total = inst.n() + inst.k();
    if (total > budget.max_total_jobs) {
      throw BudgetExceeded("oracle: instance exceeds max_total_jobs budget");
    }
    all.reserve(total);
    refs.reserve(total);
    for (int agent : {1, 2}) {
      const auto& jobs = inst.jobs(agent);
      for (size_t i = 0; i < jobs.size(); ++i) {
        all.push_back(&jobs[i]);
        refs.push_back({agent, static_cast<int>(i)});
      }
    }
    used.assign(all.size(), false);

    // Identical jobs (same agent, p, w, d) are forced into id order, which
    // collapses permutations of interchangeable jobs to one representative.
    prev_identical.assign(all.size(), -1);
    for (size_t i = 0; i < all.size(); ++i) {
      int best_prev = -1;
      for (size_t j = 0; j < all.size(); ++j) {
        if (i == j || refs[i].agent != refs[j].agent) continue;
        const Job &a = *all[i], &b = *all[j];
        if (a.p == b.p && a.w == b.w && a.d == b.d && b.id < a.id) {
          if (best_prev < 0 || all[best_prev]->id < b.id) {
            best_prev = static_cast<int>(j);
          }
        }
      }
      prev_identical[i] = best_prev;
    }
  }

  bool pin_choice_live(int agent) const {
    return inst.crit(agent).kind == CriterionKind::WeightedJitCount;
  }

  // Upper bound on the JIT weight still collectable by `agent` given the
  // machine frees at `free_at`.
  int64_t jit_potential(int agent) const {
    int64_t potential = 0;
    const int base = agent == 1 ? 0 : inst.n();
    const auto& jobs = inst.jobs(agent);
    for (size_t i = 0; i < jobs.size(); ++i) {
      if (used[base + i]) continue;
      if (jobs[i].jit_possible() && *jobs[i].d - jobs[i].p >= free_at) {
        potential = checked_add(potential, jobs[i].w);
      }
    }
    return potential;
  }

  int64_t& value_of(int agent) { return agent == 1 ? v1 : v2; }

  bool prune_against_bound(int agent) {
    const Criterion& crit = inst.crit(agent);
    const int64_t bound = inst.bound(agent);
    const int64_t value = value_of(agent);
    if (crit.is_lower_bound()) {
      return checked_add(value, jit_potential(agent)) < bound;
    }
    return value > bound;
  }

  // Returns true to stop the whole search (feasibility mode found a witness).
  bool leaf() {
    if (pairs) {
      pairs->emplace(v1, v2);
      return false;
    }
    if (check_bounds) {
      if (inst.crit1.meets(v1, inst.a1) && inst.crit2.meets(v2, inst.a2)) {
        Schedule s;
        for (const SeqItem& item : seq) s.entries.push_back({item.job, item.start});
        assert(is_feasible_schedule(s, inst));
        witness = std::move(s);
        return true;
      }
      return false;
    }
    // Optimal mode: other agent's bound already enforced by pruning, but the
    // JIT potential prune is only an upper bound, so re-check here.
    const int other = fix_agent == 1 ? 2 : 1;
    if (!inst.crit(other).meets(value_of(other), inst.bound(other))) return false;
    const int64_t value = value_of(fix_agent);
    if (!best) {
      best = value;
    } else if (inst.crit(fix_agent).is_lower_bound()) {
      best = std::max(*best, value);
    } else {
      best = std::min(*best, value);
    }
    return false;
  }

  bool step(int agent, int flat, bool pin) {
    // The budget caps partial-layout extensions, an upper bound on the
    // number of complete configurations the search can materialize.
    if (++leaves > budget.max_configurations) {
      throw BudgetExceeded("oracle: configuration budget exhausted");
    }
    const Job& job = *all[flat];
    int64_t start = free_at;
    if (pin) {
      start = *job.d - job.p;
      if (start < free_at) return false;  // pin unreachable, skip branch
    }
    const int64_t completion = checked_add(start, job.p);

    int64_t delta = 0;
    switch (inst.crit(agent).kind) {
      case CriterionKind::TotalWeightedCompletion:
        delta = checked_mul(job.w, completion);
        break;
      case CriterionKind::WeightedTardyCount:
        delta = (job.d && completion > *job.d) ? job.w : 0;
        break;
      case CriterionKind::WeightedJitCount:
        delta = (job.d && completion == *job.d) ? job.w : 0;
        break;
    }

    const int64_t saved_free = free_at;
    used[flat] = true;
    seq.push_back({refs[flat], pin, start});
    free_at = completion;
    value_of(agent) = checked_add(value_of(agent), delta);

    bool stop = recurse();

    value_of(agent) -= delta;
    free_at = saved_free;
    seq.pop_back();
    used[flat] = false;
    return stop;
  }

  bool recurse() {
    // Prune on both agents' bounds in the modes that know them.
    if (check_bounds) {
      if (prune_against_bound(1) || prune_against_bound(2)) return false;
    } else if (fix_agent != 0) {
      const int other = fix_agent == 1 ? 2 : 1;
      if (prune_against_bound(other)) return false;
      if (best) {
        // Branch-and-bound on the optimized value.
        const Criterion& crit = inst.crit(fix_agent);
        if (crit.is_lower_bound()) {
          if (checked_add(value_of(fix_agent), jit_potential(fix_agent)) <= *best &&
              seq.size() < all.size()) {
            // Cannot strictly improve; equal is already recorded.
            return false;
          }
        } else if (value_of(fix_agent) > *best) {
          return false;
        }
      }
    }

    if (seq.size() == all.size()) return leaf();

    for (size_t flat = 0; flat < all.size(); ++flat) {
      if (used[flat]) continue;
      if (prev_identical[flat] >= 0 && !used[prev_identical[flat]]) continue;
      const int agent = refs[flat].agent;
      if (step(agent, static_cast<int>(flat), false)) return true;
      if (pin_choice_live(agent) && all[flat]->jit_possible() &&
          *all[flat]->d - all[flat]->p != free_at) {
        if (step(agent, static_cast<int>(flat), true)) return true;
      }
    }
    return false;
  }
};

}  // namespace

SolveOutcome brute_force_feasible(const Instance& inst, const OracleBudget& budget) {
  const auto t0 = std::chrono::steady_clock::now();
  Enumerator e(inst, budget);
  e.check_bounds = true;
  e.recurse();

  SolveOutcome out;
  out.feasible = e.witness.has_value();
  out.witness = std::move(e.witness);
  out.stats.nodes = e.leaves;
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::optional<int64_t> brute_force_optimal(const Instance& inst, int fix_agent,
                                           const OracleBudget& budget) {
  if (fix_agent != 1 && fix_agent != 2) {
    throw std::invalid_argument("brute_force_optimal: fix_agent must be 1 or 2");
  }
  Enumerator e(inst, budget);
  e.fix_agent = fix_agent;
  e.recurse();
  return e.best;
}

std::vector<std::pair<int64_t, int64_t>> enumerate_value_pairs(const Instance& inst,
                                                               const OracleBudget& budget) {
  std::set<std::pair<int64_t, int64_t>> collected;
  Enumerator e(inst, budget);
  e.pairs = &collected;
  e.recurse();
  return {collected.begin(), collected.end()};
}

}  // namespace tas
