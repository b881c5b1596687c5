#ifndef TAS_SUBROUTINES_HPP
#define TAS_SUBROUTINES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tas/core.hpp"

// Single-agent and constrained-chain building blocks. Each routine is an
// independent algorithm validated against brute force in the test suite;
// the top-level solvers compose them.

namespace tas {

struct MooreResult {
  std::vector<int> early;  // indices into the input span, in EDD order
  int64_t makespan = 0;    // offset + sum of early processing times
};

// Moore-Hodgson with the clock starting at `offset`: scan the EDD sequence,
// and when the running completion passes a due date evict the longest
// scheduled job. If fewer than `min_early` jobs can be early, returns
// nullopt. Otherwise the early set is trimmed (evicting longest first) to
// exactly `min_early` jobs, which minimizes the makespan among all
// selections with at least that many early jobs.
std::optional<MooreResult> moore_hodgson_offset(std::span<const Job> edd_jobs,
                                                int64_t offset, int min_early);

struct ChainScheduleResult {
  std::vector<JobRef> sequence;  // full sequence over jobs1 + chain2
  int64_t agent1_sum_completion = 0;
};

// Decides min sum-of-completion-times for unit-weight jobs1 subject to every
// job of the due-dated chain2 (EDD order, fixed sequence) finishing on time.
// Agent-1 jobs run in SPT order; each chain job is deferred until scheduling
// the next agent-1 job first would push the chain job past its latest start.
// Returns nullopt iff chain2 alone cannot be scheduled on time.
std::optional<ChainScheduleResult> min_sumc_with_mandatory_early(
    std::span<const Job> jobs1, std::span<const Job> chain2);

struct MandatoryEarlyResult {
  int early_count = 0;            // early jobs among jobs1
  std::vector<JobRef> sequence;   // early part (merged EDD) then evicted jobs
};

// Max number of early jobs1 subject to all chain2 jobs early: merged EDD scan
// where chain2 jobs are mandatory; a late mandatory job evicts the longest
// optional jobs until it fits. Returns nullopt if a mandatory job stays late
// with no optional job left to evict.
std::optional<MandatoryEarlyResult> max_early_count_with_mandatory(
    std::span<const Job> jobs1, std::span<const Job> chain2);

struct UnitSlotResult {
  int64_t early_weight = 0;             // total weight of early jobs1
  std::vector<std::pair<JobRef, int64_t>> placed;  // (job, slot start)
};

// All processing times are 1; slots are (t-1, t]. Chain2 jobs are pinned
// latest-due-date-first into the latest free slot not past their due date;
// agent-1 jobs follow in non-increasing weight order under the same rule.
// Returns nullopt if some chain2 job finds no slot.
std::optional<UnitSlotResult> unit_time_max_wearly(std::span<const Job> jobs1,
                                                   std::span<const Job> chain2);

struct WeightedInterval {
  int64_t start = 0;
  int64_t end = 0;  // half-open (start, end]; touching endpoints compatible
  int64_t weight = 1;
};

struct WisResult {
  int64_t weight = 0;
  std::vector<int> chosen;  // indices into the input, sorted by end time
};

// Classic weighted interval scheduling DP (sort by end, binary-searched
// predecessor). Deterministic tie-break: an interval is taken only when it
// strictly improves the best value without it.
WisResult weighted_interval_scheduling(std::span<const WeightedInterval> intervals);

}  // namespace tas

#endif  // TAS_SUBROUTINES_HPP
