#pragma once

#include "relfix/relspace.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace relfix {

// ---------------------------------------------------------------------------
// Map representations
// ---------------------------------------------------------------------------

struct FiniteMappingPair {
  std::vector<int> f, g;  // total self-maps as index arrays
};

struct MapRule {
  // value(x) = scale*x + offset; a constant is scale == 0.
  Rat scale, offset;

  static MapRule constant(Rat c) { return MapRule{Rat(0), std::move(c)}; }
  static MapRule affine(Rat scale, Rat offset) {
    return MapRule{std::move(scale), std::move(offset)};
  }
  Rat apply(const Rat& x) const { return scale * x + offset; }
  bool is_constant() const { return scale == 0; }
};

struct MapPiece {
  Region cell;  // effective cell: declared pattern minus earlier pieces
  MapRule rule;
};

// Piecewise map over a computable carrier. Pieces partition the carrier
// (validated at construction from first-match declarations).
class CMap {
 public:
  CMap() = default;
  // Declared pieces in order; first match wins. Throws std::invalid_argument
  // if the declarations do not cover the carrier.
  CMap(const Region& carrier, std::vector<std::pair<Region, MapRule>> declared);

  const std::vector<MapPiece>& pieces() const { return pieces_; }

  Rat eval(const Rat& x) const;  // throws if x is outside every cell
  // Value on an irrational span; defined when one piece's cell covers the
  // span with a constant rule.
  std::optional<Rat> eval_irrational(const Rat& lo, const Rat& hi) const;

  Region image(const Region& r) const;
  Region image_all() const;
  Region preimage_value(const Rat& v) const;
  // {x : this(x) == other(x)}, exact for affine rules.
  Region equal_set(const CMap& other) const;
  Region fixed_set() const;  // {x : this(x) == x}

 private:
  Region carrier_;
  std::vector<MapPiece> pieces_;
};

struct CMappingPair {
  CMap f, g;
};

class MappingPair {
 public:
  explicit MappingPair(FiniteMappingPair p) : v_(std::move(p)) {}
  explicit MappingPair(CMappingPair p) : v_(std::move(p)) {}

  bool is_finite() const { return std::holds_alternative<FiniteMappingPair>(v_); }
  const FiniteMappingPair& finite() const { return std::get<FiniteMappingPair>(v_); }
  const CMappingPair& computable() const { return std::get<CMappingPair>(v_); }

 private:
  std::variant<FiniteMappingPair, CMappingPair> v_;
};

// ---------------------------------------------------------------------------
// Coincidence structure
// ---------------------------------------------------------------------------

struct FiniteProfile {
  std::vector<int> coincidence_points;      // u with fu == gu
  std::vector<int> points_of_coincidence;   // v with v == fu == gu for some u
  std::vector<int> common_fixed_points;     // u with u == fu == gu
};

struct ComputableProfile {
  Region coincidence_points;
  Region points_of_coincidence;
  Region common_fixed_points;
};

FiniteProfile coincidence_profile(const FiniteMappingPair& pair, const FiniteSpace& space);
ComputableProfile coincidence_profile(const CMappingPair& pair,
                                      const ComputableSpace& space);

struct CommutingProfile {
  bool commuting = false;
  bool weakly_commuting = false;
  bool weakly_compatible = false;  // commutation at every coincidence point
  bool sampled = false;            // global flags checked on samples only
  bool weakly_compatible_exact = true;
  std::optional<std::string> commuting_witness;
  std::optional<std::string> weakly_commuting_witness;
  std::optional<std::string> weakly_compatible_witness;
};

// The finite set of values attained at coincidence points, when the
// coincidence set factors into finitely many values; nullopt otherwise.
std::optional<std::vector<Rat>> coincidence_values_exact(const CMappingPair& pair);

CommutingProfile commuting_profile(const FiniteMappingPair& pair, const FiniteSpace& space);
CommutingProfile commuting_profile(const CMappingPair& pair, const ComputableSpace& space,
                                   std::size_t sample_budget);

// First (u,v) with (gu,gv) in R but (fu,fv) not in R, scanning in index order.
std::optional<std::pair<int, int>> fg_closed_violation(const FiniteRelation& r,
                                                       const FiniteMappingPair& pair,
                                                       int carrier_size);

// Minimal-index section of g: one representative per image value, so g
// restricted to the result is injective with the same image.
std::vector<int> g_section(const std::vector<int>& g);

}  // namespace relfix
