#include "tas/classify.hpp"

namespace tas {

const char* tractability_name(Tractability status) {
  switch (status) {
    case Tractability::Fpt: return "FPT";
    case Tractability::Xp: return "XP";
    case Tractability::HardConstantK: return "NP-hard-for-constant-k";
    case Tractability::Open: return "Open";
  }
  throw std::invalid_argument("unknown tractability status");
}

InstanceShape instance_shape(const Instance& inst) {
  InstanceShape s;
  s.unit_w1 = s.unit_w2 = s.unit_p1 = s.unit_p2 = true;
  for (const Job& j : inst.jobs1) {
    s.unit_w1 = s.unit_w1 && j.w == 1;
    s.unit_p1 = s.unit_p1 && j.p == 1;
  }
  for (const Job& j : inst.jobs2) {
    s.unit_w2 = s.unit_w2 && j.w == 1;
    s.unit_p2 = s.unit_p2 && j.p == 1;
  }
  s.common_d1 = true;
  for (const Job& j : inst.jobs1) {
    if (!j.d || (inst.jobs1[0].d && *j.d != *inst.jobs1[0].d)) s.common_d1 = false;
  }
  return s;
}

TractabilityVerdict classify(const Instance& inst) {
  const InstanceShape s = instance_shape(inst);
  const CriterionKind c1 = inst.crit1.kind;
  const CriterionKind c2 = inst.crit2.kind;
  using K = CriterionKind;

  auto verdict = [](Tractability st, const char* cite, const char* solver) {
    return TractabilityVerdict{st, cite, solver};
  };

  if (c1 == K::TotalWeightedCompletion) {
    if (c2 == K::TotalWeightedCompletion) {
      if (s.unit_w1) {
        return verdict(Tractability::Fpt, "fpt-cc-interleave-search", "solve_c_wc");
      }
      if (s.unit_p1) {
        return verdict(Tractability::Fpt, "fpt-cc-unitp-interleave-search",
                       "solve_wc_wc_unitp");
      }
      return verdict(Tractability::HardConstantK, "np-hard-k1-partition-split",
                     "oracle-only");
    }
    if (c2 == K::WeightedTardyCount) {
      if (s.unit_w1) {
        return verdict(Tractability::Fpt, "fpt-tardy-subsets-chain-insertion",
                       "solve_c_wu");
      }
      return verdict(Tractability::HardConstantK, "np-hard-k1-partition-split",
                     "oracle-only");
    }
    // A single mandatory JIT job already blocks a window of the timeline.
    return verdict(Tractability::HardConstantK, "np-hard-k1-jit-window-blocking",
                   "oracle-only");
  }

  if (c1 == K::WeightedTardyCount) {
    if (c2 == K::TotalWeightedCompletion) {
      if (s.unit_w1 && s.unit_w2) {
        return verdict(Tractability::Xp, "xp-block-partitions-moore-spt", "solve_u_c");
      }
      if (s.unit_w1) {
        return verdict(Tractability::Xp, "xp-block-partitions-moore", "solve_u_wc");
      }
      return verdict(Tractability::HardConstantK, "np-hard-k0-weighted-tardy",
                     "oracle-only");
    }
    if (c2 == K::WeightedTardyCount) {
      if (s.unit_w1) {
        return verdict(Tractability::Fpt, "fpt-tardy-subsets-mandatory-moore",
                       "solve_u_wu");
      }
      if (s.unit_p1 && s.unit_p2) {
        return verdict(Tractability::Fpt, "fpt-unit-slots-weight-greedy",
                       "solve_wu_wu_unitp");
      }
      return verdict(Tractability::HardConstantK, "np-hard-k0-weighted-tardy",
                     "oracle-only");
    }
    return verdict(Tractability::HardConstantK,
                   "np-hard-k1-jit-window-blocking-common-due", "oracle-only");
  }

  if (c1 == K::WeightedJitCount) {
    if (c2 == K::TotalWeightedCompletion) {
      if (s.unit_w1) {
        return verdict(Tractability::Fpt, "fpt-jit-gap-packing-dp", "solve_e_wc");
      }
      return verdict(Tractability::Open, "open-weighted-jit-vs-completion",
                     "oracle-only");
    }
    if (c2 == K::WeightedTardyCount) {
      return verdict(Tractability::Fpt, "fpt-jit-early-gap-dp", "solve_we_wu");
    }
    return verdict(Tractability::Fpt, "fpt-jit-disjoint-windows", "solve_we_we");
  }

  throw std::invalid_argument("classify: criteria pair outside the matrix");
}

}  // namespace tas
