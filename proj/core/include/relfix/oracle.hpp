#pragma once

#include "relfix/contraction.hpp"
#include "relfix/mappings.hpp"
#include "relfix/relspace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relfix {
namespace oracle {

// Ground truth by exhaustive scan. Kept deliberately free of the mappings
// module so the two computations can disagree only through a bug.
FiniteProfile brute_force_solutions(const FiniteMappingPair& pair,
                                    const FiniteSpace& space);

enum class MetricFlavor { RandomTable, PathMetric };

struct InstanceGeneratorConfig {
  int carrier_size = 4;  // 2..8
  Rat relation_density = Rat(1, 2);
  MetricFlavor metric = MetricFlavor::RandomTable;
  std::uint64_t seed = 1;
};

struct GeneratedInstance {
  FiniteSpace space;
  FiniteMappingPair pair;
  // Linear comparison coefficient drawn alongside the instance, for
  // contraction checks over it.
  Rat phi_k;
};

// Deterministic under seed; the result always passes metric_axioms_check and
// has a nonempty relation. Throws std::runtime_error when the density is too
// low to produce one within bounded retries.
GeneratedInstance random_instance(const InstanceGeneratorConfig& config);

enum class DiffVerdict { Pass, Skipped, TheoremViolated };

struct DifferentialResult {
  DiffVerdict verdict = DiffVerdict::Skipped;
  bool th1_certified = false;
  bool th2_certified = false;
  bool th3_certified = false;
  bool th4_certified = false;
  std::string detail;
};

// Certifies the theorem hypothesis sets on the instance; wherever they fully
// certify, asserts the proven conclusions against brute force and the
// solver. A TheoremViolated verdict on a certified instance is a bug signal,
// not a property of the instance.
DifferentialResult differential_check(const FiniteSpace& space,
                                      const FiniteMappingPair& pair,
                                      const ContractionCondition& cond);

struct FuzzConfig {
  std::uint64_t base_seed = 1;
  long count = 1000;
  int min_size = 2;
  int max_size = 8;
  Rat relation_density = Rat(1, 2);
  int jobs = 1;
};

struct FuzzSummary {
  long instances = 0;
  long profile_disagreements = 0;
  long closure_equivalence_failures = 0;
  long functional_order_failures = 0;  // N > M somewhere
  long trace_bound_failures = 0;
  long trace_r_preservation_failures = 0;
  long th1_certified = 0;
  long th2_certified = 0;
  long th3_certified = 0;
  long th4_certified = 0;
  long theorem_violations = 0;
  std::vector<std::string> violation_details;

  bool clean() const {
    return profile_disagreements == 0 && closure_equivalence_failures == 0 &&
           functional_order_failures == 0 && trace_bound_failures == 0 &&
           trace_r_preservation_failures == 0 && theorem_violations == 0;
  }
};

// Seeded sweep: per instance runs the profile agreement, functional order,
// closure equivalence, certified-trace bounds and the theorem gates.
// Deterministic given the config; seeds run independently (in parallel when
// jobs > 1) and merge in seed order.
FuzzSummary run_fuzz(const FuzzConfig& config);

}  // namespace oracle
}  // namespace relfix
