#ifndef TAS_JIT_HPP
#define TAS_JIT_HPP

#include <limits>

#include "tas/core.hpp"

// Just-in-time solvers: two dynamic programs over consecutive JIT agent-1
// jobs (gap-packing the agent-2 sequence between them) and the 2^k interval
// algorithm for the JIT-vs-JIT variant.

namespace tas {

inline constexpr int64_t kJitUnreachable = std::numeric_limits<int64_t>::max() / 4;

// Agent-1 jobs EDD-renumbered 1..n and framed by dummy jobs 0 and n+1
// (p = w = 0; d_0 = 0; d_{n+1} large enough that no gap constraint binds),
// plus a fixed agent-2 order with processing-time prefix sums.
struct JitDpContext {
  int n = 0;
  int k = 0;
  std::vector<int64_t> d1, p1, w1;  // 0..n+1, dummies at both ends
  std::vector<int> agent1_at;       // EDD position 1..n -> instance jobs1 index
  std::vector<int> agent2_at;       // order position 1..k -> instance jobs2 index
  std::vector<int64_t> p2_prefix;   // p2_prefix[j] = total p of first j agent-2 jobs
  std::vector<int64_t> w2;          // 1-based
  std::vector<int64_t> d2;          // 1-based; -1 when the job has no due date
};

JitDpContext make_jit_context(const Instance& inst, std::span<const int> agent2_order);

// Size of the longest prefix of the remaining agent-2 sequence (jobs
// ell+1, ell+2, ...) whose total processing time fits the idle gap
// d_b - d_a - p_b between consecutive JIT jobs a and b; 0 when the gap is
// negative or nothing remains.
int k_abl(const JitDpContext& ctx, int a, int b, int ell);

// Weighted completion contribution of exactly that packed prefix when it
// starts back-to-back right after C_a = d_a.
int64_t w_abl(const JitDpContext& ctx, int a, int b, int ell);

struct JitCcState {
  int a = -1, e = -1, l = -1;
};

// Min agent-2 weighted completion table: value[b][e][l] over partial
// schedules on the first b agent-1 jobs and first l agent-2 jobs, with e
// real JIT agent-1 jobs and b the last scheduled (JIT) one. Transitions pack
// the maximal agent-2 prefix into each gap; dummies do not count toward e.
struct JitCcTable {
  std::vector<std::vector<std::vector<int64_t>>> value;
  std::vector<std::vector<std::vector<JitCcState>>> parent;
};
JitCcTable fill_jit_cc_table(const JitDpContext& ctx, int max_e);

// Max agent-1 JIT weight table for the tardy-bounded variant: value[b][l],
// transitions additionally require every packed agent-2 job to finish by its
// due date (they are committed early jobs).
struct JitWuTable {
  std::vector<std::vector<int64_t>> value;  // -kJitUnreachable when unreachable
  std::vector<std::vector<std::pair<int, int>>> parent;  // (a, l')
};
JitWuTable fill_jit_wu_table(const JitDpContext& ctx);

// The execution window (d - p, d] a job must occupy to finish just in time.
struct JitInterval {
  JobRef job;
  int64_t start = 0;
  int64_t end = 0;
};
// nullopt when d is absent or d < p (such a job can never be just in time).
std::optional<JitInterval> jit_interval(const Job& job, JobRef ref);

// Unit-weight agent-1 JIT count vs weighted agent-2 completion time: k!
// orders, one gap-packing DP each; feasible iff some order reaches
// value[n+1][A1][k] <= A2.
SolveOutcome solve_e_wc(const Instance& inst, const SolveOptions& options = {});

// Weighted agent-1 JIT count vs weighted agent-2 tardy count: enumerate
// agent-2 early sets (complement weight <= A2), EDD-pack them with the
// earliness-gated DP; feasible iff some candidate reaches weight >= A1.
SolveOutcome solve_we_wu(const Instance& inst, const SolveOptions& options = {});

// Weighted JIT counts on both agents: enumerate agent-2 subsets with
// pairwise-disjoint JIT windows and weight >= A2, then maximum-weight
// disjoint agent-1 windows among those avoiding the chosen agent-2 windows.
SolveOutcome solve_we_we(const Instance& inst, const SolveOptions& options = {});

}  // namespace tas

#endif  // TAS_JIT_HPP
