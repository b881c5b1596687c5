#ifndef TAS_TARDY_HPP
#define TAS_TARDY_HPP

#include "tas/core.hpp"

// Tardy-count solvers: the block-partition search for tardy count vs
// weighted completion (polynomial for each fixed k), and the subset
// algorithms for the tardy-vs-tardy variants.

namespace tas {

// A candidate restricted-schedule shape for solve_u_wc: the EDD-ordered
// agent-1 sequence is cut into k+1 consecutive blocks, block i keeps
// exactly early[i] early jobs, and the (i+1)-th agent-2 job runs right after
// block i's early jobs. sum(early) = n - min(A1, n), so at most A1 agent-1
// jobs are deferred to the tail.
struct BlockPlan {
  std::vector<int> splits;     // k non-decreasing cut positions in 0..n
  std::vector<int64_t> early;  // k+1 per-block early counts
};

// Unit-weight agent-1 tardy count vs weighted agent-2 total completion:
// for every agent-2 order and every BlockPlan, per-block Moore-Hodgson with
// threaded start offsets decides the plan. stats.subproblems counts plans
// evaluated per order (full enumeration when infeasible).
SolveOutcome solve_u_wc(const Instance& inst, const SolveOptions& options = {});

// Same with unit agent-2 weights: only the agent-2 SPT order is tried.
SolveOutcome solve_u_c(const Instance& inst, const SolveOptions& options = {});

// Unit-weight agent-1 tardy count vs weighted agent-2 tardy count: enumerate
// agent-2 tardy sets, keep the rest early via the merged mandatory scan.
SolveOutcome solve_u_wu(const Instance& inst, const SolveOptions& options = {});

// Both tardy counts weighted, all processing times 1 on both agents:
// enumerate agent-2 tardy sets and fill unit slots greedily by weight.
SolveOutcome solve_wu_wu_unitp(const Instance& inst, const SolveOptions& options = {});

}  // namespace tas

#endif  // TAS_TARDY_HPP
