#pragma once

#include "relfix/mappings.hpp"
#include "relfix/relspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relfix {

// When both maps are constant on each cell of their common refinement, the
// instance collapses to finitely many carrier classes: every hypothesis that
// quantifies over pairs (u,v) only reads f/g values, which are constant per
// class. The quotient makes those hypotheses exactly decidable on infinite
// carriers.
struct QuotientCell {
  enum class Kind { PointCell, RationalCell, IrrationalCell };
  Kind kind = Kind::PointCell;
  std::string name;
  Rat f_value, g_value;
  Rat lo, hi;            // span for interval cells; lo == hi == value for points
  std::optional<Rat> representative;  // rational witness; absent for irrational cells

  Point as_point() const {
    if (kind == Kind::IrrationalCell) return Point::irr(lo, hi);
    return Point::val(representative ? *representative : lo);
  }
};

struct Quotient {
  std::vector<QuotientCell> cells;

  std::vector<Rat> f_values() const;
  std::vector<Rat> g_values() const;
};

// nullopt when some refined cell carries a non-constant rule over more than
// one point (the instance does not factor through finitely many classes).
std::optional<Quotient> build_quotient(const ComputableSpace& space,
                                       const CMappingPair& pair);

}  // namespace relfix
