#pragma once

#include "relfix/mappings.hpp"
#include "relfix/quotient.hpp"
#include "relfix/relspace.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace relfix {

// ---------------------------------------------------------------------------
// Comparison functions
// ---------------------------------------------------------------------------

enum class PhiKind { Linear, Tabulated };

// Candidate comparison function. Linear phi(t) = k*t with 0 <= k < 1 has its
// iterate sum in closed form; tabulated candidates interpolate a monotone
// breakpoint table linearly (extended by the last slope) and declare a
// geometric tail ratio that validation checks but cannot prove.
struct ComparisonFunction {
  PhiKind kind = PhiKind::Linear;
  Rat k;                                    // linear coefficient
  std::vector<std::pair<Rat, Rat>> table;   // (t, phi(t)) breakpoints, t increasing
  Rat tail_ratio;                           // declared: phi^{n+1}(t) <= ratio*phi^n(t)
  int tail_from = 1;                        // ...for all n >= tail_from

  static ComparisonFunction linear(Rat coefficient);

  Rat apply(const Rat& t) const;
  Rat iterate(const Rat& t, unsigned long n) const;
};

struct PhiValidation {
  bool valid = false;
  bool summability_exact = false;  // proved (linear), not just checked
  std::vector<std::string> failures;
};

// Checks (increasing, iterate summability, phi(s) < s) on the given grid of
// positive rationals; linear candidates are decided exactly, tabulated ones
// up to `horizon` iterates against the declared tail ratio (within tol).
PhiValidation validate_phi(const ComparisonFunction& phi, const std::vector<Rat>& grid,
                           int horizon, const Rat& tol);

// ---------------------------------------------------------------------------
// Contraction functionals and conditions
// ---------------------------------------------------------------------------

// max{ d(gu,gv), d(gu,fu), d(gv,fv), [d(gu,fv)+d(gv,fu)]/2 } from the four
// image values; both carriers route through this form.
Rat m_functional(const Rat& d_gu_gv, const Rat& d_gu_fu, const Rat& d_gv_fv,
                 const Rat& d_gu_fv, const Rat& d_gv_fu);
// max{ d(gu,gv), [d(gu,fu)+d(gv,fv)]/2, [d(gu,fv)+d(gv,fu)]/2 }.
Rat n_functional(const Rat& d_gu_gv, const Rat& d_gu_fu, const Rat& d_gv_fv,
                 const Rat& d_gu_fv, const Rat& d_gv_fu);

Rat m_value(const FiniteMappingPair& pair, const FiniteSpace& space, int u, int v);
Rat n_value(const FiniteMappingPair& pair, const FiniteSpace& space, int u, int v);
Rat m_value(const CMappingPair& pair, const ComputableSpace& space, const Point& u,
            const Point& v);
Rat n_value(const CMappingPair& pair, const ComputableSpace& space, const Point& u,
            const Point& v);

enum class Variant {
  MType,        // d(fu,fv) <= phi(M)
  NType,        // d(fu,fv) <= phi(N)
  Linear,       // d(fu,fv) <= alpha*d(gu,gv)
  ScaledN,      // d(fu,fv) <= k*N
  HardyRogers,  // d(fu,fv) <= a*d(gu,gv) + b*[...] + c*[...]
  Kannan,       // d(fu,fv) <= k*[d(gu,fu)+d(gv,fv)]
  Chatterjea,   // d(fu,fv) <= k*[d(gu,fv)+d(gv,fu)]
  UniversalN,   // NType quantified over every pair, relation ignored
};

std::string variant_label(Variant v);
std::optional<Variant> variant_from_label(const std::string& label);

struct ContractionCondition {
  Variant variant = Variant::MType;
  std::optional<ComparisonFunction> phi;  // MType / NType / UniversalN
  Rat alpha;                              // Linear: [0,1)
  Rat k;                                  // ScaledN: [0,1); Kannan/Chatterjea: [0,1/2)
  Rat a, b, c;                            // HardyRogers: a+2b+2c < 1

  // Throws std::invalid_argument when a constant is outside its range.
  void validate_constants() const;
};

struct BindingCase {
  std::string u, v;
  Rat lhs, rhs;
};

struct ContractionOutcome {
  bool holds = false;
  bool exhaustive = true;
  long checked_pairs = 0;
  std::optional<BindingCase> binding;    // tightest satisfied case (rhs > 0)
  std::optional<BindingCase> violation;  // when !holds
  std::string note;
};

enum class CheckMode { Auto, Exhaustive, Sampled };

// Verifies d(fu,fv) <= bound(u,v) over all (u,v) with (gu,gv) in R
// (UniversalN: over all pairs). Exhaustive on finite carriers; on computable
// ones exact via a constant f or the class quotient, else sampled.
ContractionOutcome check_contraction(const ContractionCondition& cond,
                                     const FiniteMappingPair& pair,
                                     const FiniteSpace& space, const FiniteRelation& r,
                                     CheckMode mode = CheckMode::Auto);
ContractionOutcome check_contraction(const ContractionCondition& cond,
                                     const CMappingPair& pair,
                                     const ComputableSpace& space, const CRelation& r,
                                     CheckMode mode = CheckMode::Auto,
                                     std::size_t sample_budget = 512);

// Executable content of the closure equivalence: quantifying the condition
// over R and over its symmetric closure must agree on symmetric metrics.
bool closure_equivalence_check(const ContractionCondition& cond,
                               const FiniteMappingPair& pair, const FiniteSpace& space,
                               const FiniteRelation& r);

}  // namespace relfix
