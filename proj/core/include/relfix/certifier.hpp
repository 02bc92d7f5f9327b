#pragma once

#include "relfix/contraction.hpp"
#include "relfix/mappings.hpp"
#include "relfix/relspace.hpp"
#include "relfix/solver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relfix {

enum class TheoremId { Th1, Th2, Th3, Th4, Cor0, Cor2, Cor5, Cor6, Cor8, Cor9, Cor10 };

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

enum class VerdictKind {
  Holds,           // decided exactly
  TriviallyHolds,  // decided by a finite-space argument, recorded in detail
  AssertedHolds,   // user-declared; undecidable here
  HoldsOnSamples,  // no violation among samples; not exhaustive
  Fails,           // decided exactly, witness attached
  AssertedFails,   // user-declared failure
  Undecidable,
};

std::string verdict_kind_name(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Undecidable;
  std::string detail;
  std::vector<std::string> witness;
  std::optional<BindingCase> binding;  // contraction entries
  long samples = 0;

  bool certifies() const {
    return kind == VerdictKind::Holds || kind == VerdictKind::TriviallyHolds ||
           kind == VerdictKind::AssertedHolds;
  }
  static Verdict holds(std::string detail = "");
  static Verdict trivially(std::string detail);
  static Verdict fails(std::string detail, std::vector<std::string> witness = {});
  static Verdict undecidable(std::string detail);
};

// Hypothesis labels follow the theorem statements: (f),(g),(h),(i),(k1),(k2),
// (l1),(l2),(l3), a contraction label, (r),(s),(t), corollary-specific
// (n),(o),(p),(A), and (wc) for weak compatibility.
struct HypothesisEntry {
  std::string label;
  Verdict verdict;
};

struct Conclusion {
  std::vector<std::string> coincidence_points;
  std::vector<std::string> points_of_coincidence;
  std::vector<std::string> common_fixed_points;
  bool coincidence_finite = true;  // false: the region is not a finite set
  std::string region_text;
  bool exists_coincidence = false;
  bool unique_coincidence_point = false;
  bool unique_point_of_coincidence = false;
  bool unique_common_fixed_point = false;
  std::optional<IterationTrace> trace;
  std::string trace_start;
};

struct OracleAgreement {
  bool available = false;
  bool agrees = true;
  std::string detail;
};

struct HypothesisReport {
  TheoremId theorem = TheoremId::Th1;
  std::vector<HypothesisEntry> entries;
  bool certified = false;
  bool moreover_certified = false;  // directedness + weak compatibility tier
  std::optional<Conclusion> conclusion;
  std::optional<OracleAgreement> oracle_agreement;

  const Verdict* find(const std::string& label) const;
};

// label -> declared truth, for hypotheses undecidable on computable carriers
// (they never override an exact verdict).
using AssertionMap = std::map<std::string, bool>;

struct CheckOptions {
  std::size_t probe_budget = 4096;
  std::size_t sample_budget = 512;
  bool with_conclusion = true;
};

// ---------------------------------------------------------------------------
// Finite-space decision procedures for the sequence-quantified hypotheses.
// Each one's derivation is validated in tests against bounded sequence
// enumeration before being trusted here.
// ---------------------------------------------------------------------------

// Every Cauchy sequence in a finite metric space is eventually constant,
// hence convergent; R-completeness holds for any relation.
Verdict r_complete_finite(const FiniteSpace& space);

// Without g: any convergent R-preserving sequence ends in a constant tail at
// its limit u with (u,u) in R, and that tail is the subsequence. With g:
// holds iff (u,u) in R implies (gu,gu) in R.
Verdict d_self_closed_finite(const FiniteSpace& space, const FiniteRelation& r,
                             const std::vector<int>* g);

// Admissible sequences force constant image tails at a point of coincidence v
// with (v,v) in R, so compatibility reduces to f(v) == g(v) at those v.
Verdict r_compatible_finite(const FiniteSpace& space, const FiniteRelation& r,
                            const FiniteMappingPair& pair);

// ---------------------------------------------------------------------------

HypothesisReport check_theorem(TheoremId theorem, const RelationalSpace& space,
                               const MappingPair& pair,
                               const std::optional<ContractionCondition>& condition,
                               const AssertionMap& asserted = {},
                               const CheckOptions& options = {});

}  // namespace relfix
