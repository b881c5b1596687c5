#ifndef TAS_REDUCTIONS_HPP
#define TAS_REDUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "tas/core.hpp"

// Instance generators from the Partition reductions: adversarial test
// families with ground truth decided by an exact subset-sum check.

namespace tas {

struct PartitionInstance {
  std::vector<int64_t> values;  // positive integers, multiset semantics

  int64_t total() const;
  int64_t half() const { return total() / 2; }  // z; total must be even
};

// Throws std::invalid_argument unless all values are positive and the sum is
// even (otherwise no equal split can exist and the generators reject).
void validate_partition(const PartitionInstance& pi);

// Subset-sum decision: can the multiset split into two halves of equal sum?
bool solve_partition(const PartitionInstance& pi);

enum class Thm1Variant { SumCompletion, TardyCount, JitCount };

// Weighted-completion hardness family: m agent-1 jobs with p = w = x_j, one
// unit agent-2 job, A1 = z + sum_{i} sum_{j<=i} x_i x_j (order-independent,
// equal to ((sum x)^2 + sum x^2) / 2). The agent-2 criterion and bound vary:
// completion <= z+1, tardy count <= 0, or JIT count >= 1 (d = z+1 for the
// due-date variants). Feasible iff the Partition instance is a yes-instance.
Instance reduce_thm1(const PartitionInstance& pi, Thm1Variant variant);

// JIT-vs-JIT hardness family: n = k = m unit-time jobs per agent, the j-th
// job of each agent due at j with weight x_j, both bounds z. Only one of the
// two jobs sharing due date j can be just in time, so hitting z on both
// sides is exactly an equal split.
Instance reduce_thm10(const PartitionInstance& pi);

}  // namespace tas

#endif  // TAS_REDUCTIONS_HPP
