#ifndef TAS_CLASSIFY_HPP
#define TAS_CLASSIFY_HPP

#include <string>

#include "tas/core.hpp"

// The tractability matrix as executable routing: which solver (if any)
// handles a criteria pair given the instance's structural shape.

namespace tas {

enum class Tractability {
  Fpt,           // f(k) * poly(n) solver available
  Xp,            // poly(n) for each fixed k; FPT status open
  HardConstantK, // NP-hard already for a constant number of agent-2 jobs
  Open,          // complexity unresolved; only the oracle applies
};

const char* tractability_name(Tractability status);

struct TractabilityVerdict {
  Tractability status = Tractability::Open;
  // Stable result tag naming what applies (e.g. "fpt-interleave-milp",
  // "np-hard-k1-partition"); part of the CLI output contract.
  std::string citation;
  // Operation name to route to, or "oracle-only".
  std::string solver;
};

// Structural flags the matrix refines on.
struct InstanceShape {
  bool unit_w1 = false;
  bool unit_w2 = false;
  bool unit_p1 = false;
  bool unit_p2 = false;
  bool common_d1 = false;  // all agent-1 due dates equal (when present)
};
InstanceShape instance_shape(const Instance& inst);

// Total over the nine criteria pairs and their structural refinements; every
// Fpt/Xp verdict names a solver that accepts the instance as-is.
TractabilityVerdict classify(const Instance& inst);

}  // namespace tas

#endif  // TAS_CLASSIFY_HPP
