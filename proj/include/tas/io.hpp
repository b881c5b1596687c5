#ifndef TAS_IO_HPP
#define TAS_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "tas/core.hpp"

// Instance document serialization and seeded random generation. Documents
// are JSON with the fields criteria/{agent1,agent2}/{kind,bound}, jobs1,
// jobs2 (objects with p, optional w defaulting to 1, optional d), and an
// optional self-validating "expected" verdict. Jobs are positional: ids are
// assigned from array order.

namespace tas {

struct ParsedDocument {
  Instance instance;
  std::optional<bool> expected;  // sidecar ground truth, when present
};

// Throws std::invalid_argument with a field-anchored message
// ("jobs1[2].p: ...") on malformed documents.
ParsedDocument parse_document(const std::string& text);
Instance parse_instance_document(const std::string& text);

std::string serialize_instance(const Instance& inst,
                               std::optional<bool> expected = std::nullopt);

const char* verdict_name(bool feasible);  // "feasible" / "infeasible"

// Deterministic across platforms and stdlib implementations: the same spec
// always yields byte-identical documents.
struct RandomSpec {
  int n = 4;
  int k = 2;
  CriterionKind crit1 = CriterionKind::TotalWeightedCompletion;
  CriterionKind crit2 = CriterionKind::TotalWeightedCompletion;
  bool unit_w1 = false;
  bool unit_w2 = false;
  bool unit_p1 = false;
  bool unit_p2 = false;
  int64_t max_p = 3;
  int64_t max_w = 2;
  uint64_t seed = 1;
};
Instance random_instance(const RandomSpec& spec);

// Small deterministic PRNG (splitmix64) so seeds mean the same thing
// everywhere; used by every seeded sweep in the suite.
struct SplitMix64 {
  uint64_t state = 0;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // Uniform in [lo, hi] without stdlib distribution quirks.
  int64_t range(int64_t lo, int64_t hi);
};

}  // namespace tas

#endif  // TAS_IO_HPP
