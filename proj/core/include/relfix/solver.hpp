#pragma once

#include "relfix/contraction.hpp"
#include "relfix/mappings.hpp"
#include "relfix/relspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relfix {

struct SolverConfig {
  Rat epsilon = Rat(1, 1000000000);  // computable-carrier stop tolerance
  long max_iterations = 10000;
  // Preimage choice under g: least index (finite) / simplest rational
  // (computable) unless a user section overrides a value.
  std::vector<std::pair<Rat, Rat>> user_section;        // (value, chosen preimage)
  std::vector<std::pair<int, int>> user_section_finite;  // (value idx, preimage idx)
};

struct IterationTrace {
  enum class Outcome { Coincidence, BudgetExhausted, NoPreimage };

  std::vector<Point> w;             // w_0 .. w_T
  std::vector<Point> gw;            // g(w_n), with g(w_{n+1}) == f(w_n)
  std::vector<Rat> step_distances;  // d(gw_n, gw_{n+1}) for executed steps
  Outcome outcome = Outcome::BudgetExhausted;
  std::optional<Point> coincidence_point;
  long fail_step = -1;  // NoPreimage step index
};

// Least-index w0 with (g(w0), f(w0)) in R, or nullopt (no admissible start).
std::optional<int> find_starting_point(const FiniteSpace& space,
                                       const FiniteMappingPair& pair);
// Computable carriers scan the canonical probe stream (rationals in
// simplicity order, then named irrational classes when the maps factor).
std::optional<Point> find_starting_point(const ComputableSpace& space,
                                         const CMappingPair& pair,
                                         std::size_t probe_budget = 4096);

IterationTrace picard_jungck(const FiniteSpace& space, const FiniteMappingPair& pair,
                             int w0, const SolverConfig& config);
IterationTrace picard_jungck(const ComputableSpace& space, const CMappingPair& pair,
                             const Point& w0, const SolverConfig& config);

// Upper bound on d(gw_n, gw_m) for every m >= n, from the iterate tail of a
// validated phi at the initial step distance d0. Exact geometric closed form
// for linear phi; horizon partial sum plus declared geometric tail otherwise.
// Throws std::invalid_argument when phi does not validate.
Rat error_bound(const ComparisonFunction& phi, const Rat& d0, unsigned long n);

struct PromoteResult {
  bool ok = false;
  std::optional<Point> common_fixed_point;
  std::string failure;  // violated equality when !ok
};

// Steps a coincidence point x to y = g(x) and checks y = f(y) = g(y); the
// weak-compatibility premise is verified at x first.
PromoteResult promote_to_common_fixed(const FiniteMappingPair& pair,
                                      const FiniteSpace& space, int x);
PromoteResult promote_to_common_fixed(const CMappingPair& pair,
                                      const ComputableSpace& space, const Rat& x);

}  // namespace relfix
