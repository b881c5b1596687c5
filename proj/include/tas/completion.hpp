#ifndef TAS_COMPLETION_HPP
#define TAS_COMPLETION_HPP

#include "tas/core.hpp"
#include "tas/milp.hpp"

// Completion-time solvers: each enumerates agent-2 orders (k!) or tardy
// subsets (2^k) and delegates the per-subproblem decision to the
// interleaving models or the chain subroutines.

namespace tas {

// Unit-weight agent-1 total completion vs weighted agent-2 total completion.
// SPT-renumbers agent 1, tries every agent-2 order against the interleaving
// model, and realizes the witness from the first feasible assignment.
SolveOutcome solve_c_wc(const Instance& inst, const SolveOptions& options = {});

// Both criteria weighted total completion with unit agent-1 processing
// times; agent 1 runs in non-increasing weight order.
SolveOutcome solve_wc_wc_unitp(const Instance& inst, const SolveOptions& options = {});

// Unit-weight agent-1 total completion vs weighted agent-2 tardy count:
// enumerates the agent-2 tardy sets (lightest tardy weight first), keeps the
// rest early via the mandatory-chain subroutine, appends tardy jobs last.
SolveOutcome solve_c_wu(const Instance& inst, const SolveOptions& options = {});

// Witness realizers, exposed because the two models read their integer
// variables with opposite meanings ("before" vs "after"); each is
// property-tested against evaluate() on its own.
Schedule realize_cc_witness(const Instance& inst, std::span<const int> agent2_order,
                            const IntAssignment& assignment);
Schedule realize_unitp_witness(const Instance& inst, std::span<const int> agent2_order,
                               const IntAssignment& assignment);

}  // namespace tas

#endif  // TAS_COMPLETION_HPP
