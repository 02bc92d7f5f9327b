#pragma once

#include "relfix/rational.hpp"
#include "relfix/region.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relfix {

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

// Relation over a finite carrier, stored as ordered index pairs.
struct FiniteRelation {
  std::set<std::pair<int, int>> pairs;

  bool member(int u, int v) const { return pairs.count({u, v}) > 0; }
  bool empty() const { return pairs.empty(); }
};

FiniteRelation symmetric_closure(const FiniteRelation& r);
bool comparable(const FiniteRelation& r, int u, int v);

enum class CRelKind { List, Cone, Universal };

// Relation over a computable carrier. The cone variant is the order cone
// {(x,y): x >= y >= 0} u {(x,y): x <= y <= 0}; membership is decided on
// rational coordinates only.
struct CRelation {
  CRelKind kind = CRelKind::Universal;
  std::vector<std::pair<Rat, Rat>> pairs;  // List only
  bool symmetrized = false;

  bool member(const Rat& x, const Rat& y) const;
  bool empty() const { return kind == CRelKind::List && pairs.empty(); }
  // List relations only: the closure's pair set, sorted and deduplicated.
  std::vector<std::pair<Rat, Rat>> materialized_pairs() const;

 private:
  bool member_base(const Rat& x, const Rat& y) const;
};

CRelation symmetric_closure(const CRelation& r);
bool comparable(const CRelation& r, const Rat& x, const Rat& y);

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

// Finite metric space with an explicit distance table and relation.
// Construction does not enforce the metric axioms; run metric_axioms_check.
struct FiniteSpace {
  std::vector<std::string> labels;
  std::vector<std::vector<Rat>> dist;
  FiniteRelation relation;
  std::optional<std::vector<int>> subspace;  // Y as sorted indices

  int size() const { return static_cast<int>(labels.size()); }
  const Rat& d(int u, int v) const { return dist[u][v]; }
  std::optional<int> label_index(const std::string& label) const;
  bool in_subspace(int u) const;  // Y defaults to the whole carrier
};

// Carrier of rational+irrational numbers inside declared intervals, with the
// absolute-difference metric.
struct ComputableSpace {
  Region carrier;
  CRelation relation;
  std::optional<Region> subspace;

  Rat d(const Rat& x, const Rat& y) const { return rat_abs(x - y); }
  const Region& y_region() const { return subspace ? *subspace : carrier; }
};

class RelationalSpace {
 public:
  explicit RelationalSpace(FiniteSpace s) : v_(std::move(s)) {}
  explicit RelationalSpace(ComputableSpace s) : v_(std::move(s)) {}

  bool is_finite() const { return std::holds_alternative<FiniteSpace>(v_); }
  const FiniteSpace& finite() const { return std::get<FiniteSpace>(v_); }
  const ComputableSpace& computable() const { return std::get<ComputableSpace>(v_); }

 private:
  std::variant<FiniteSpace, ComputableSpace> v_;
};

// A carrier element. Finite carriers use indices; computable carriers use
// exact rational coordinates or a symbolic member of an irrational span
// (all irrationals of (lo,hi) behave identically there by construction).
struct Point {
  enum class Kind { Index, Value, IrrationalSpan };
  Kind kind = Kind::Index;
  int index = -1;
  Rat value;
  Rat span_lo, span_hi;

  static Point idx(int i) {
    Point p;
    p.kind = Kind::Index;
    p.index = i;
    return p;
  }
  static Point val(Rat v) {
    Point p;
    p.kind = Kind::Value;
    p.value = std::move(v);
    return p;
  }
  static Point irr(Rat lo, Rat hi) {
    Point p;
    p.kind = Kind::IrrationalSpan;
    p.span_lo = std::move(lo);
    p.span_hi = std::move(hi);
    return p;
  }
};

std::string point_name(const RelationalSpace& space, const Point& p);

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

// Completeness of a relation over a point set D (diagonal included): every
// pair must be comparable. Returns the first failing pair in scan order, or
// nullopt when complete. Empty D is vacuously complete.
std::optional<std::pair<int, int>> complete_relation_violation(
    const FiniteRelation& r, const std::vector<int>& domain);
std::optional<std::pair<Rat, Rat>> complete_relation_violation(
    const CRelation& r, const std::vector<Rat>& domain);

// Directedness of D: every pair of D needs a common successor w (g applied to
// w when a mapping is supplied). Finite version scans the whole carrier for w.
std::optional<std::pair<int, int>> directed_violation(
    const FiniteRelation& r, const std::vector<int>& domain, int carrier_size,
    const std::vector<int>* g);
// Computable version: the caller supplies the candidate g-images to try.
std::optional<std::pair<Rat, Rat>> directed_violation(
    const CRelation& r, const std::vector<Rat>& domain,
    const std::vector<Rat>& candidate_g_values);

struct MetricAxiomReport {
  struct Violation {
    enum class Kind { Diagonal, Symmetry, Positivity, Triangle };
    Kind kind;
    int u = -1, v = -1, w = -1;
    std::string detail;
  };
  std::vector<Violation> violations;
  bool exhaustive = true;
  long checked = 0;

  bool ok() const { return violations.empty(); }
};

// Exhaustive on finite tables; spot-check on a rational sample grid for
// computable carriers (absolute difference satisfies the axioms by algebra,
// the grid run documents it on the instance).
MetricAxiomReport metric_axioms_check(const FiniteSpace& space);
MetricAxiomReport metric_axioms_check(const ComputableSpace& space,
                                      std::size_t grid_size);

}  // namespace relfix
