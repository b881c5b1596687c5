#ifndef TAS_MILP_HPP
#define TAS_MILP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tas/core.hpp"

// Mixed-integer feasibility machinery for the interleaving formulations of
// the completion-time solvers: a model builder for the step-variable
// encodings and a specialized bounded-integer feasibility search.
//
// The search replaces a general MILP algorithm on purpose: every integer
// variable is bounded in 0..n and every continuous variable admits a
// closed-form tight evaluation at any integer assignment, so a depth-first
// search over monotone integer chains is exact. This trades the f(k)*poly(n)
// guarantee for O(C(n+k, k)) worst case, which is fine at desk scale.

namespace tas {

struct Rational {
  int64_t num = 0;
  int64_t den = 1;  // > 0, normalized

  static Rational of(int64_t value) { return {value, 1}; }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(int64_t num, int64_t den);

struct IntVarDef {
  std::string name;
  int64_t lower = 0;
  int64_t upper = 0;  // finite by construction
};

struct ContVarDef {
  std::string name;
  bool lower_zero = false;  // lower bound 0 when true, else unbounded below
};

// Variable indices: 0..#int-1 are integer variables, then continuous ones.
struct LinearTerm {
  Rational coef;
  int var = 0;
};

// sum(coef * var) <= rhs
struct LinearLe {
  std::vector<LinearTerm> terms;
  Rational rhs;
};

struct MilpModel {
  std::vector<IntVarDef> int_vars;
  std::vector<ContVarDef> cont_vars;
  std::vector<LinearLe> constraints;

  int var_count() const { return static_cast<int>(int_vars.size() + cont_vars.size()); }
  const std::string& var_name(int index) const;

  // One constraint per line, `coef*var ... <= rhs`, for golden-file tests.
  std::string dump() const;
};

struct IntAssignment {
  std::map<std::string, int64_t> values;
};

// Interleaving model for unit-weight agent-1 total completion vs weighted
// agent-2 total completion. x_j counts agent-1 jobs scheduled before the
// j-th agent-2 job (in the given order); agent-1 jobs are SPT-renumbered
// internally. Emits, in order: the x upper bounds, the monotone chain
// x_j <= x_{j+1}, the agent-1 bound, the y_ij >= 0 rows, the step rows
// y_ij >= (x_j - i + 1)(p_i - p_{i-1}), the aggregation rows
// y_j >= sum_i y_ij, and the agent-2 bound.
MilpModel build_cc_model(const Instance& inst, std::span<const int> agent2_order);

// Unit-processing-time variant: agent-1 jobs all have p = 1 and are
// renumbered by non-increasing weight; x_j counts agent-1 jobs scheduled
// AFTER the j-th agent-2 job, the chain runs x_j >= x_{j+1}, and the step
// rows bound the weight tail sums instead of processing-time prefixes.
MilpModel build_unitp_model(const Instance& inst, std::span<const int> agent2_order);

struct MilpSolveResult {
  std::optional<IntAssignment> assignment;  // lexicographically smallest, if any
  SolveStats stats;                         // nodes = integer leaves evaluated
};

// Depth-first search over the integer variables in index order with
// monotone-chain range propagation; at each leaf the continuous variables
// take their tight values (each definer at max(0, its linear bound), each
// aggregate at the sum of its sources) and the bound rows are checked.
// Models outside this tight-evaluation pattern are rejected with
// std::invalid_argument: this solver is specialized, not general.
MilpSolveResult solve_feasibility(const MilpModel& model);

struct TightRowValue {
  int constraint_index = 0;  // into model.constraints
  int64_t lhs = 0;           // tight-evaluated left-hand side as emitted
};

// Tight-evaluates the bound rows (the rows solve_feasibility checks at its
// leaves) under a complete integer assignment. The soundness tests compare
// these against evaluate() on the realized schedule.
std::vector<TightRowValue> tight_check_row_values(const MilpModel& model,
                                                  const IntAssignment& assignment);

}  // namespace tas

#endif  // TAS_MILP_HPP
