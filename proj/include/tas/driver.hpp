#ifndef TAS_DRIVER_HPP
#define TAS_DRIVER_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tas/classify.hpp"
#include "tas/core.hpp"
#include "tas/oracle.hpp"

// Routing and the solver-vs-oracle sweep engine behind the CLI verbs and the
// acceptance suite.

namespace tas {

struct RoutingUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RoutedSolve {
  TractabilityVerdict verdict;
  SolveOutcome outcome;
  std::string engine;  // operation actually run ("solve_c_wc", "oracle")
};

// classify -> route -> solve. Hard/open cells fall back to the brute-force
// oracle when the instance fits its budget; otherwise RoutingUnavailable.
RoutedSolve route_and_solve(const Instance& inst, const SolveOptions& options = {},
                            const OracleBudget& budget = {});

// Operation registry for bench filters and the verify sweeps.
std::vector<std::string> solver_names();
SolveOutcome run_solver(const std::string& name, const Instance& inst,
                        const SolveOptions& options = {});
// True when `inst` satisfies the operation's preconditions (criteria pair and
// structural shape).
bool solver_accepts(const std::string& name, const Instance& inst);

struct SweepConfig {
  std::string solver;    // operation under test
  bool exhaustive = true;
  // Exhaustive tier: all job structures up to these sizes (p/w multisets from
  // the choice lists, due dates over {1..sum p} thinned to a deterministic
  // grid once the combination count passes d_combo_cap).
  int max_n = 3;
  int max_k = 2;
  std::vector<int64_t> p_choices = {1, 2, 3};
  std::vector<int64_t> w_choices = {1, 2};
  int64_t d_combo_cap = 1296;
  // Random tier: seeded instances at larger sizes, bounds drawn around the
  // achievable range.
  int random_count = 0;
  int random_max_n = 6;
  int random_max_k = 3;
  uint64_t seed = 1;
  // Every cross_check-th exhaustive verdict is recomputed with a direct
  // brute_force_feasible call on top of the shared layout enumeration.
  int cross_check = 37;
};

struct SweepReport {
  int64_t structures = 0;       // distinct job structures enumerated
  int64_t instances = 0;        // (structure, bound pair) decisions compared
  int64_t disagreements = 0;
  int64_t cross_checks = 0;     // direct oracle re-verifications
  std::string first_counterexample;  // serialized document, when disagreeing
  double elapsed_ms = 0.0;
};

// Runs the solver against the oracle over the configured family; every
// disagreement is counted and the first one is captured as a document.
SweepReport sweep_solver_vs_oracle(const SweepConfig& config,
                                   const SolveOptions& options = {});

}  // namespace tas

#endif  // TAS_DRIVER_HPP
