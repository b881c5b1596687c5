#ifndef TAS_CORE_HPP
#define TAS_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core domain model for two-agent single-machine feasibility problems:
// jobs, criteria, instances, schedules, and the evaluation/ordering
// primitives shared by every solver in the suite.

namespace tas {

// All objective arithmetic is 64-bit with explicit overflow detection;
// values are bounded by (sum p)*(sum w), so a silent wraparound would be
// a caller bug we want to surface as an error, never as a wrong verdict.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

enum class CriterionKind {
  TotalWeightedCompletion,  // sum of w_j * C_j, upper-bounded
  WeightedTardyCount,       // sum of w_j * [C_j > d_j], upper-bounded
  WeightedJitCount,         // sum of w_j * [C_j == d_j], lower-bounded
};

struct Criterion {
  CriterionKind kind = CriterionKind::TotalWeightedCompletion;

  // The JIT count is a maximization criterion; the other two minimize.
  bool is_lower_bound() const { return kind == CriterionKind::WeightedJitCount; }
  bool needs_due_dates() const { return kind != CriterionKind::TotalWeightedCompletion; }
  bool meets(int64_t value, int64_t bound) const {
    return is_lower_bound() ? value >= bound : value <= bound;
  }

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

const char* criterion_kind_name(CriterionKind kind);

struct Job {
  int id = 0;     // unique within the owning agent's set
  int agent = 1;  // 1 or 2
  int64_t p = 1;  // processing time, >= 1
  int64_t w = 1;  // weight, >= 1 (1 for unweighted variants)
  std::optional<int64_t> d;  // due date, required iff the agent's criterion uses it

  // A job with d < p can never complete exactly at its due date; it is
  // representable and simply never JIT-schedulable.
  bool jit_possible() const { return d.has_value() && *d >= p; }

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::vector<Job> jobs1;
  std::vector<Job> jobs2;
  Criterion crit1;
  Criterion crit2;
  int64_t a1 = 0;
  int64_t a2 = 0;

  int n() const { return static_cast<int>(jobs1.size()); }
  int k() const { return static_cast<int>(jobs2.size()); }
  const std::vector<Job>& jobs(int agent) const { return agent == 1 ? jobs1 : jobs2; }
  const Criterion& crit(int agent) const { return agent == 1 ? crit1 : crit2; }
  int64_t bound(int agent) const { return agent == 1 ? a1 : a2; }
  int64_t total_p() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws std::invalid_argument if job fields or due-date requirements are
// violated (p/w/d positivity, due dates present under due-date criteria,
// unique ids per agent).
void validate_instance(const Instance& inst);

struct JobRef {
  int agent = 1;
  int index = 0;

  friend auto operator<=>(const JobRef&, const JobRef&) = default;
};

struct ScheduleEntry {
  JobRef job;
  int64_t start = 0;  // occupies (start, start + p]
};

struct Schedule {
  std::vector<ScheduleEntry> entries;
};

struct JobOutcome {
  int64_t completion = 0;
  std::optional<int64_t> lateness;  // C - d, when d exists
  bool tardy = false;               // C > d
  bool jit = false;                 // C == d
};

struct ObjectiveReport {
  int64_t value1 = 0;
  int64_t value2 = 0;
  std::vector<JobOutcome> jobs1;
  std::vector<JobOutcome> jobs2;

  int64_t value(int agent) const { return agent == 1 ? value1 : value2; }
};

// Computes both agents' criterion values from the schedule's completion
// times. The schedule must cover exactly the instance's jobs (structural
// mismatch throws std::invalid_argument).
ObjectiveReport evaluate(const Schedule& schedule, const Instance& inst);

// True iff execution intervals are pairwise disjoint, coverage is exact,
// and both agents' bounds are met in their respective directions.
// Malformed schedules yield false with a diagnostic in *reason.
bool is_feasible_schedule(const Schedule& schedule, const Instance& inst,
                          std::string* reason = nullptr);

// Stable orderings used as normal forms throughout: non-decreasing p
// (resp. d), ties broken by job id so witnesses are reproducible.
std::vector<int> spt_order(std::span<const Job> jobs);
std::vector<int> edd_order(std::span<const Job> jobs);  // throws if a due date is missing
// Non-increasing weight, ties by id; the unit-processing-time normal form.
std::vector<int> weight_desc_order(std::span<const Job> jobs);

// Lays out `sequence` in order: a non-designated job starts at the current
// machine-free time, a designated job is pinned to start at d - p so it
// completes exactly at its due date. Returns nullopt when a designated job
// cannot reach C = d (the designation set is infeasible for this order).
// Idle gaps appear only immediately before designated jobs.
std::optional<Schedule> normalize_left_shift(const Instance& inst,
                                             std::span<const JobRef> sequence,
                                             std::span<const JobRef> jit_designated);

struct SolveStats {
  int64_t nodes = 0;        // leaves / configurations explored
  int64_t subproblems = 0;  // outer enumeration items (orders, subsets, plans)
  double elapsed_ms = 0.0;
};

struct SolveOptions {
  // Evaluate independent orders/subsets/plans across threads; the verdict and
  // witness stay deterministic (smallest feasible item index wins).
  bool parallel = false;
};

struct SolveOutcome {
  bool feasible = false;
  std::optional<Schedule> witness;  // present iff feasible
  SolveStats stats;

  static SolveOutcome yes(Schedule s) {
    SolveOutcome o;
    o.feasible = true;
    o.witness = std::move(s);
    return o;
  }
  static SolveOutcome no() { return {}; }
};

}  // namespace tas

#endif  // TAS_CORE_HPP
