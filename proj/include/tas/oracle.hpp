#ifndef TAS_ORACLE_HPP
#define TAS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tas/core.hpp"

// Exact brute-force feasibility for tiny instances; the ground truth that
// every solver and every normal-form restriction is tested against.
//
// Completeness of the enumerated space: any feasible schedule can be
// transformed, without breaking feasibility, into a canonical layout where
// each job either starts the moment the machine frees or is pinned to finish
// exactly at its due date. Shifting a job left never increases a completion
// time, so it never hurts an upper-bounded criterion; a job counted by a
// just-in-time criterion is kept pinned at C = d, and pinning stays valid
// because everything before it only moves earlier. Jobs of agents whose
// criterion is not just-in-time gain nothing from a pin (it only delays
// them and everything after them), so the pin choice is enumerated exactly
// for jobs of just-in-time agents.

namespace tas {

struct OracleBudget {
  int max_total_jobs = 8;
  int64_t max_configurations = 50'000'000;  // explored-leaf cap
};

// Resource exhaustion, deliberately distinct from an Infeasible verdict.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumerates canonical layouts (all job sequences, with identical jobs kept
// in id order, times the pin choices described above) and returns the first
// witness passing is_feasible_schedule, else Infeasible.
SolveOutcome brute_force_feasible(const Instance& inst, const OracleBudget& budget = {});

// Best achievable criterion value for fix_agent subject to the other agent's
// bound; nullopt when no layout satisfies the other agent's bound at all.
std::optional<int64_t> brute_force_optimal(const Instance& inst, int fix_agent,
                                           const OracleBudget& budget = {});

// Every achievable (value1, value2) pair over the canonical layout space,
// sorted and deduplicated. By the completeness argument above this set
// decides feasibility for every bound pair of the same criteria.
std::vector<std::pair<int64_t, int64_t>> enumerate_value_pairs(
    const Instance& inst, const OracleBudget& budget = {});

}  // namespace tas

#endif  // TAS_ORACLE_HPP
