#include "tas/reductions.hpp"

#include <algorithm>
#include <cassert>

namespace tas {

int64_t PartitionInstance::total() const {
  int64_t sum = 0;
  for (int64_t x : values) sum = checked_add(sum, x);
  return sum;
}

void validate_partition(const PartitionInstance& pi) {
  for (int64_t x : pi.values) {
    if (x < 1) throw std::invalid_argument("partition values must be positive");
  }
  if (pi.total() % 2 != 0) {
    throw std::invalid_argument("partition instance needs an even total");
  }
}

bool solve_partition(const PartitionInstance& pi) {
  validate_partition(pi);
  const int64_t z = pi.half();
  std::vector<bool> reachable(z + 1, false);
  reachable[0] = true;
  for (int64_t x : pi.values) {
    for (int64_t s = z; s >= x; --s) {
      if (reachable[s - x]) reachable[s] = true;
    }
  }
  return reachable[z];
}

Instance reduce_thm1(const PartitionInstance& pi, Thm1Variant variant) {
  validate_partition(pi);
  const int64_t z = pi.half();

  Instance inst;
  for (size_t j = 0; j < pi.values.size(); ++j) {
    Job job;
    job.id = static_cast<int>(j);
    job.agent = 1;
    job.p = pi.values[j];
    job.w = pi.values[j];
    inst.jobs1.push_back(job);
  }
  Job j2;
  j2.id = 0;
  j2.agent = 2;
  j2.p = 1;
  j2.w = 1;

  // A1 = z + sum_i sum_{j<=i} x_i x_j, computed via the closed form
  // ((sum x)^2 + sum x^2) / 2; the double sum does not depend on the order
  // of X, which the tests assert against the literal sum.
  int64_t sum = pi.total();
  int64_t sum_sq = 0;
  for (int64_t x : pi.values) sum_sq = checked_add(sum_sq, checked_mul(x, x));
  const int64_t pair_sum = (checked_mul(sum, sum) + sum_sq) / 2;
  inst.a1 = checked_add(z, pair_sum);
  inst.crit1 = {CriterionKind::TotalWeightedCompletion};

  switch (variant) {
    case Thm1Variant::SumCompletion:
      inst.crit2 = {CriterionKind::TotalWeightedCompletion};
      inst.a2 = z + 1;
      break;
    case Thm1Variant::TardyCount:
      inst.crit2 = {CriterionKind::WeightedTardyCount};
      inst.a2 = 0;
      j2.d = z + 1;
      break;
    case Thm1Variant::JitCount:
      inst.crit2 = {CriterionKind::WeightedJitCount};
      inst.a2 = 1;
      j2.d = z + 1;
      break;
  }
  inst.jobs2.push_back(j2);
  validate_instance(inst);
  return inst;
}

Instance reduce_thm10(const PartitionInstance& pi) {
  validate_partition(pi);
  const int64_t z = pi.half();

  Instance inst;
  for (int agent : {1, 2}) {
    auto& jobs = agent == 1 ? inst.jobs1 : inst.jobs2;
    for (size_t j = 0; j < pi.values.size(); ++j) {
      Job job;
      job.id = static_cast<int>(j);
      job.agent = agent;
      job.p = 1;
      job.w = pi.values[j];
      job.d = static_cast<int64_t>(j) + 1;  // paired due dates 1..m
      jobs.push_back(job);
    }
  }
  inst.crit1 = {CriterionKind::WeightedJitCount};
  inst.crit2 = {CriterionKind::WeightedJitCount};
  inst.a1 = z;
  inst.a2 = z;
  validate_instance(inst);
  return inst;
}

}  // namespace tas
