#include "tas/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tas {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in objective arithmetic (add)");
  }
  return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in objective arithmetic (mul)");
  }
  return out;
}

const char* criterion_kind_name(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::TotalWeightedCompletion: return "total_weighted_completion";
    case CriterionKind::WeightedTardyCount: return "weighted_tardy_count";
    case CriterionKind::WeightedJitCount: return "weighted_jit_count";
  }
  throw std::invalid_argument("unknown criterion kind");
}

int64_t Instance::total_p() const {
  int64_t total = 0;
  for (const Job& j : jobs1) total = checked_add(total, j.p);
  for (const Job& j : jobs2) total = checked_add(total, j.p);
  return total;
}

void validate_instance(const Instance& inst) {
  for (int agent : {1, 2}) {
    const auto& jobs = inst.jobs(agent);
    std::set<int> ids;
    for (size_t i = 0; i < jobs.size(); ++i) {
      const Job& j = jobs[i];
      std::ostringstream at;
      at << "jobs" << agent << "[" << i << "]";
      if (j.agent != agent) throw std::invalid_argument(at.str() + ": agent tag mismatch");
      if (j.p < 1) throw std::invalid_argument(at.str() + ".p: must be >= 1");
      if (j.w < 1) throw std::invalid_argument(at.str() + ".w: must be >= 1");
      if (j.d && *j.d < 1) throw std::invalid_argument(at.str() + ".d: must be >= 1 when present");
      if (inst.crit(agent).needs_due_dates() && !j.d) {
        throw std::invalid_argument(at.str() + ".d: required by the agent's criterion");
      }
      if (!ids.insert(j.id).second) {
        throw std::invalid_argument(at.str() + ".id: duplicate id within agent set");
      }
    }
  }
  if (inst.a1 < 0 || inst.a2 < 0) throw std::invalid_argument("bounds must be non-negative");
}

namespace {

// Completion times keyed by (agent, index); throws on coverage mismatch.
std::vector<std::vector<int64_t>> completion_times(const Schedule& schedule,
                                                   const Instance& inst) {
  std::vector<std::vector<int64_t>> comp(2);
  comp[0].assign(inst.jobs1.size(), -1);
  comp[1].assign(inst.jobs2.size(), -1);
  for (const ScheduleEntry& e : schedule.entries) {
    if (e.job.agent != 1 && e.job.agent != 2) {
      throw std::invalid_argument("schedule entry with invalid agent");
    }
    auto& slot = comp[e.job.agent - 1];
    if (e.job.index < 0 || static_cast<size_t>(e.job.index) >= slot.size()) {
      throw std::invalid_argument("schedule entry references a job outside the instance");
    }
    if (slot[e.job.index] >= 0) {
      throw std::invalid_argument("schedule contains a job twice");
    }
    if (e.start < 0) throw std::invalid_argument("schedule entry with negative start");
    const Job& j = inst.jobs(e.job.agent)[e.job.index];
    slot[e.job.index] = checked_add(e.start, j.p);
  }
  for (int a = 0; a < 2; ++a) {
    for (size_t i = 0; i < comp[a].size(); ++i) {
      if (comp[a][i] < 0) throw std::invalid_argument("schedule misses a job of the instance");
    }
  }
  return comp;
}

int64_t criterion_value(const Criterion& crit, std::span<const Job> jobs,
                        std::span<const JobOutcome> outcomes) {
  int64_t value = 0;
  for (size_t i = 0; i < jobs.size(); ++i) {
    switch (crit.kind) {
      case CriterionKind::TotalWeightedCompletion:
        value = checked_add(value, checked_mul(jobs[i].w, outcomes[i].completion));
        break;
      case CriterionKind::WeightedTardyCount:
        if (outcomes[i].tardy) value = checked_add(value, jobs[i].w);
        break;
      case CriterionKind::WeightedJitCount:
        if (outcomes[i].jit) value = checked_add(value, jobs[i].w);
        break;
    }
  }
  return value;
}

}  // namespace

ObjectiveReport evaluate(const Schedule& schedule, const Instance& inst) {
  auto comp = completion_times(schedule, inst);
  ObjectiveReport report;
  for (int agent : {1, 2}) {
    const auto& jobs = inst.jobs(agent);
    auto& outcomes = agent == 1 ? report.jobs1 : report.jobs2;
    outcomes.resize(jobs.size());
    for (size_t i = 0; i < jobs.size(); ++i) {
      JobOutcome& o = outcomes[i];
      o.completion = comp[agent - 1][i];
      if (jobs[i].d) {
        o.lateness = o.completion - *jobs[i].d;
        o.tardy = *o.lateness > 0;
        o.jit = *o.lateness == 0;
      }
    }
  }
  report.value1 = criterion_value(inst.crit1, inst.jobs1, report.jobs1);
  report.value2 = criterion_value(inst.crit2, inst.jobs2, report.jobs2);
  return report;
}

bool is_feasible_schedule(const Schedule& schedule, const Instance& inst, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };

  ObjectiveReport report;
  try {
    report = evaluate(schedule, inst);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::overflow_error& e) {
    return fail(e.what());
  }

  // Disjointness of the execution intervals (start, start + p].
  std::vector<std::pair<int64_t, int64_t>> spans;
  spans.reserve(schedule.entries.size());
  for (const ScheduleEntry& e : schedule.entries) {
    const Job& j = inst.jobs(e.job.agent)[e.job.index];
    spans.emplace_back(e.start, checked_add(e.start, j.p));
  }
  std::sort(spans.begin(), spans.end());
  for (size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first < spans[i - 1].second) {
      return fail("overlapping execution intervals");
    }
  }

  if (!inst.crit1.meets(report.value1, inst.a1)) {
    return fail("agent 1 bound violated: value " + std::to_string(report.value1));
  }
  if (!inst.crit2.meets(report.value2, inst.a2)) {
    return fail("agent 2 bound violated: value " + std::to_string(report.value2));
  }
  if (reason) reason->clear();
  return true;
}

namespace {

std::vector<int> sorted_permutation(std::span<const Job> jobs,
                                    int64_t (*key)(const Job&)) {
  std::vector<int> order(jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int64_t ka = key(jobs[a]);
    int64_t kb = key(jobs[b]);
    if (ka != kb) return ka < kb;
    return jobs[a].id < jobs[b].id;
  });
  return order;
}

}  // namespace

std::vector<int> spt_order(std::span<const Job> jobs) {
  return sorted_permutation(jobs, [](const Job& j) { return j.p; });
}

std::vector<int> edd_order(std::span<const Job> jobs) {
  for (const Job& j : jobs) {
    if (!j.d) throw std::invalid_argument("edd_order requires due dates on every job");
  }
  return sorted_permutation(jobs, [](const Job& j) { return *j.d; });
}

std::vector<int> weight_desc_order(std::span<const Job> jobs) {
  return sorted_permutation(jobs, [](const Job& j) { return -j.w; });
}

std::optional<Schedule> normalize_left_shift(const Instance& inst,
                                             std::span<const JobRef> sequence,
                                             std::span<const JobRef> jit_designated) {
  std::set<JobRef> designated(jit_designated.begin(), jit_designated.end());
  for (const JobRef& r : designated) {
    const Job& j = inst.jobs(r.agent)[r.index];
    if (!j.jit_possible()) {
      throw std::invalid_argument("jit-designated job must have a due date with d >= p");
    }
  }

  Schedule out;
  out.entries.reserve(sequence.size());
  int64_t free_at = 0;
  for (const JobRef& r : sequence) {
    const Job& j = inst.jobs(r.agent)[r.index];
    int64_t start = free_at;
    if (designated.count(r)) {
      start = *j.d - j.p;
      if (start < free_at) return std::nullopt;  // cannot reach C = d any more
    }
    out.entries.push_back({r, start});
    free_at = checked_add(start, j.p);
  }
  return out;
}

}  // namespace tas
