#include "tas/subroutines.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace tas {

std::optional<MooreResult> moore_hodgson_offset(std::span<const Job> edd_jobs,
                                                int64_t offset, int min_early) {
  if (min_early < 0 || static_cast<size_t>(min_early) > edd_jobs.size()) {
    throw std::invalid_argument("moore_hodgson_offset: min_early out of range");
  }
  for (size_t i = 0; i < edd_jobs.size(); ++i) {
    if (!edd_jobs[i].d) throw std::invalid_argument("moore_hodgson_offset: missing due date");
    if (i > 0 && *edd_jobs[i].d < *edd_jobs[i - 1].d) {
      throw std::invalid_argument("moore_hodgson_offset: input not EDD-ordered");
    }
  }

  // Max-heap over (p, position) of currently scheduled jobs.
  std::priority_queue<std::pair<int64_t, int>> scheduled;
  std::vector<bool> in_early(edd_jobs.size(), false);
  int64_t t = offset;
  for (size_t i = 0; i < edd_jobs.size(); ++i) {
    scheduled.emplace(edd_jobs[i].p, static_cast<int>(i));
    in_early[i] = true;
    t = checked_add(t, edd_jobs[i].p);
    if (t > *edd_jobs[i].d) {
      auto [p, pos] = scheduled.top();
      scheduled.pop();
      in_early[pos] = false;
      t -= p;
    }
  }

  int early_count = static_cast<int>(scheduled.size());
  if (early_count < min_early) return std::nullopt;
  // Trim to exactly min_early early jobs, longest first, for minimum makespan.
  while (early_count > min_early) {
    auto [p, pos] = scheduled.top();
    scheduled.pop();
    in_early[pos] = false;
    t -= p;
    --early_count;
  }

  MooreResult result;
  result.makespan = t;
  for (size_t i = 0; i < edd_jobs.size(); ++i) {
    if (in_early[i]) result.early.push_back(static_cast<int>(i));
  }
  return result;
}

std::optional<ChainScheduleResult> min_sumc_with_mandatory_early(
    std::span<const Job> jobs1, std::span<const Job> chain2) {
  const int kc = static_cast<int>(chain2.size());
  for (int j = 0; j < kc; ++j) {
    if (!chain2[j].d) throw std::invalid_argument("chain job missing due date");
    if (j > 0 && *chain2[j].d < *chain2[j - 1].d) {
      throw std::invalid_argument("chain not EDD-ordered");
    }
  }

  // Latest start of each chain job so the whole tail still finishes on time.
  std::vector<int64_t> latest_start(kc);
  int64_t latest_completion = 0;
  for (int j = kc - 1; j >= 0; --j) {
    latest_completion = j == kc - 1 ? *chain2[j].d
                                    : std::min(*chain2[j].d, latest_start[j + 1]);
    latest_start[j] = latest_completion - chain2[j].p;
    if (latest_start[j] < 0) return std::nullopt;  // chain infeasible even alone
  }

  std::vector<int> spt = spt_order(jobs1);
  ChainScheduleResult result;
  result.sequence.reserve(jobs1.size() + chain2.size());
  int64_t t = 0;
  int next_chain = 0;
  for (int idx : spt) {
    // A chain job is inserted only once deferring it past the next agent-1
    // job would overshoot its latest start.
    while (next_chain < kc && t + jobs1[idx].p > latest_start[next_chain]) {
      result.sequence.push_back({2, next_chain});
      t = checked_add(t, chain2[next_chain].p);
      ++next_chain;
    }
    result.sequence.push_back({1, idx});
    t = checked_add(t, jobs1[idx].p);
    result.agent1_sum_completion = checked_add(result.agent1_sum_completion, t);
  }
  for (; next_chain < kc; ++next_chain) {
    result.sequence.push_back({2, next_chain});
    t = checked_add(t, chain2[next_chain].p);
  }
  return result;
}

std::optional<MandatoryEarlyResult> max_early_count_with_mandatory(
    std::span<const Job> jobs1, std::span<const Job> chain2) {
  struct Item {
    int64_t p;
    int64_t d;
    bool mandatory;
    int agent;
    int index;
  };
  std::vector<Item> merged;
  merged.reserve(jobs1.size() + chain2.size());
  for (size_t i = 0; i < jobs1.size(); ++i) {
    if (!jobs1[i].d) throw std::invalid_argument("agent-1 job missing due date");
    merged.push_back({jobs1[i].p, *jobs1[i].d, false, 1, static_cast<int>(i)});
  }
  for (size_t i = 0; i < chain2.size(); ++i) {
    if (!chain2[i].d) throw std::invalid_argument("chain job missing due date");
    merged.push_back({chain2[i].p, *chain2[i].d, true, 2, static_cast<int>(i)});
  }
  std::sort(merged.begin(), merged.end(), [](const Item& a, const Item& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.mandatory != b.mandatory) return a.mandatory;  // mandatory first on ties
    if (a.agent != b.agent) return a.agent < b.agent;
    return a.index < b.index;
  });

  // Max-heap of optional (evictable) scheduled jobs by processing time.
  std::priority_queue<std::pair<int64_t, int>> optional_heap;
  std::vector<bool> early(merged.size(), true);
  int64_t t = 0;
  for (size_t i = 0; i < merged.size(); ++i) {
    t = checked_add(t, merged[i].p);
    if (!merged[i].mandatory) optional_heap.emplace(merged[i].p, static_cast<int>(i));
    while (t > merged[i].d) {
      if (optional_heap.empty()) return std::nullopt;  // mandatory job stuck late
      auto [p, pos] = optional_heap.top();
      optional_heap.pop();
      early[pos] = false;
      t -= p;
    }
  }

  MandatoryEarlyResult result;
  std::vector<JobRef> evicted;
  for (size_t i = 0; i < merged.size(); ++i) {
    if (early[i]) {
      result.sequence.push_back({merged[i].agent, merged[i].index});
      if (!merged[i].mandatory) ++result.early_count;
    } else {
      evicted.push_back({merged[i].agent, merged[i].index});
    }
  }
  result.sequence.insert(result.sequence.end(), evicted.begin(), evicted.end());
  return result;
}

namespace {

// Next-free-slot-at-or-below lookup with path compression; slot 0 is the
// "no slot" sentinel.
struct SlotFinder {
  std::vector<int64_t> parent;
  explicit SlotFinder(int64_t slots) : parent(slots + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int64_t find(int64_t s) {
    while (parent[s] != s) {
      parent[s] = parent[parent[s]];
      s = parent[s];
    }
    return s;
  }
  void take(int64_t s) { parent[s] = s - 1; }
};

}  // namespace

std::optional<UnitSlotResult> unit_time_max_wearly(std::span<const Job> jobs1,
                                                   std::span<const Job> chain2) {
  const int64_t slots = static_cast<int64_t>(jobs1.size() + chain2.size());
  for (const Job& j : jobs1) {
    if (j.p != 1) throw std::invalid_argument("unit_time_max_wearly: non-unit processing time");
    if (!j.d) throw std::invalid_argument("unit_time_max_wearly: missing due date");
  }
  for (const Job& j : chain2) {
    if (j.p != 1) throw std::invalid_argument("unit_time_max_wearly: non-unit processing time");
    if (!j.d) throw std::invalid_argument("unit_time_max_wearly: missing due date");
  }

  SlotFinder finder(slots);
  UnitSlotResult result;

  // Mandatory jobs first, latest due date first, each into the latest free
  // slot not past its due date.
  std::vector<int> chain_order(chain2.size());
  std::iota(chain_order.begin(), chain_order.end(), 0);
  std::sort(chain_order.begin(), chain_order.end(), [&](int a, int b) {
    if (*chain2[a].d != *chain2[b].d) return *chain2[a].d > *chain2[b].d;
    return chain2[a].id > chain2[b].id;
  });
  for (int idx : chain_order) {
    int64_t slot = finder.find(std::min<int64_t>(*chain2[idx].d, slots));
    if (slot == 0) return std::nullopt;
    finder.take(slot);
    result.placed.push_back({{2, idx}, slot - 1});
  }

  // Greedy by weight for agent 1; a job with no free slot stays tardy.
  std::vector<int> w_order(jobs1.size());
  std::iota(w_order.begin(), w_order.end(), 0);
  std::sort(w_order.begin(), w_order.end(), [&](int a, int b) {
    if (jobs1[a].w != jobs1[b].w) return jobs1[a].w > jobs1[b].w;
    return jobs1[a].id < jobs1[b].id;
  });
  for (int idx : w_order) {
    int64_t slot = finder.find(std::min<int64_t>(*jobs1[idx].d, slots));
    if (slot == 0) continue;
    finder.take(slot);
    result.placed.push_back({{1, idx}, slot - 1});
    result.early_weight = checked_add(result.early_weight, jobs1[idx].w);
  }
  return result;
}

WisResult weighted_interval_scheduling(std::span<const WeightedInterval> intervals) {
  const int m = static_cast<int>(intervals.size());
  for (const WeightedInterval& iv : intervals) {
    if (iv.start >= iv.end) throw std::invalid_argument("interval must have start < end");
    if (iv.weight < 1) throw std::invalid_argument("interval weight must be >= 1");
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (intervals[a].end != intervals[b].end) return intervals[a].end < intervals[b].end;
    if (intervals[a].start != intervals[b].start) return intervals[a].start < intervals[b].start;
    return a < b;
  });

  std::vector<int64_t> ends(m);
  for (int i = 0; i < m; ++i) ends[i] = intervals[order[i]].end;

  // pred[i]: number of sorted intervals ending no later than order[i]'s start.
  std::vector<int> pred(m);
  for (int i = 0; i < m; ++i) {
    pred[i] = static_cast<int>(
        std::upper_bound(ends.begin(), ends.begin() + i, intervals[order[i]].start) -
        ends.begin());
  }

  std::vector<int64_t> best(m + 1, 0);
  for (int i = 0; i < m; ++i) {
    int64_t take = checked_add(intervals[order[i]].weight, best[pred[i]]);
    best[i + 1] = std::max(best[i], take);
  }

  WisResult result;
  result.weight = best[m];
  int i = m;
  while (i > 0) {
    if (best[i] == best[i - 1]) {
      --i;
    } else {
      result.chosen.push_back(order[i - 1]);
      i = pred[i - 1];
    }
  }
  std::reverse(result.chosen.begin(), result.chosen.end());
  return result;
}

}  // namespace tas
