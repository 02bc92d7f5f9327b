#include "relfix/mappings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace relfix {

CMap::CMap(const Region& carrier, std::vector<std::pair<Region, MapRule>> declared)
    : carrier_(carrier) {
  Region covered;
  for (auto& [pattern, rule] : declared) {
    Region cell = pattern.intersect(carrier).subtract(covered);
    if (cell.empty()) continue;
    covered = covered.unite(cell);
    pieces_.push_back(MapPiece{std::move(cell), rule});
  }
  if (!(covered == carrier) && !carrier.subtract(covered).empty()) {
    throw std::invalid_argument("map pieces do not cover the carrier: missing " +
                                carrier.subtract(covered).to_text());
  }
}

Rat CMap::eval(const Rat& x) const {
  for (const auto& p : pieces_) {
    if (p.cell.contains(x)) return p.rule.apply(x);
  }
  throw std::invalid_argument("map evaluated outside its carrier at " + rat_str(x));
}

std::optional<Rat> CMap::eval_irrational(const Rat& lo, const Rat& hi) const {
  IrrSet span = IrrSet::interval(lo, hi);
  for (const auto& p : pieces_) {
    if (span.subset_of(p.cell.irrationals())) {
      if (p.rule.is_constant()) return p.rule.offset;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Region CMap::image(const Region& r) const {
  Region out;
  for (const auto& p : pieces_) {
    Region part = p.cell.intersect(r);
    if (part.empty()) continue;
    out = out.unite(part.affine_image(p.rule.scale, p.rule.offset));
  }
  return out;
}

Region CMap::image_all() const { return image(carrier_); }

Region CMap::preimage_value(const Rat& v) const {
  Region out;
  for (const auto& p : pieces_) {
    if (p.rule.is_constant()) {
      if (p.rule.offset == v) out = out.unite(p.cell);
    } else {
      Rat x = (v - p.rule.offset) / p.rule.scale;
      out = out.unite(p.cell.intersect(Region::point(x)));
    }
  }
  return out;
}

Region CMap::equal_set(const CMap& other) const {
  Region out;
  for (const auto& a : pieces_) {
    for (const auto& b : other.pieces_) {
      Region common = a.cell.intersect(b.cell);
      if (common.empty()) continue;
      if (a.rule.scale == b.rule.scale) {
        if (a.rule.offset == b.rule.offset) out = out.unite(common);
      } else {
        Rat x = (b.rule.offset - a.rule.offset) / (a.rule.scale - b.rule.scale);
        out = out.unite(common.intersect(Region::point(x)));
      }
    }
  }
  return out;
}

Region CMap::fixed_set() const {
  Region out;
  for (const auto& p : pieces_) {
    if (p.rule.scale == 1) {
      if (p.rule.offset == 0) out = out.unite(p.cell);
    } else {
      Rat x = p.rule.offset / (Rat(1) - p.rule.scale);
      out = out.unite(p.cell.intersect(Region::point(x)));
    }
  }
  return out;
}

FiniteProfile coincidence_profile(const FiniteMappingPair& pair, const FiniteSpace& space) {
  FiniteProfile profile;
  int n = space.size();
  std::vector<bool> poc(n, false);
  for (int u = 0; u < n; ++u) {
    if (pair.f[u] == pair.g[u]) {
      profile.coincidence_points.push_back(u);
      poc[pair.f[u]] = true;
      if (pair.f[u] == u) profile.common_fixed_points.push_back(u);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (poc[v]) profile.points_of_coincidence.push_back(v);
  }
  return profile;
}

ComputableProfile coincidence_profile(const CMappingPair& pair,
                                      const ComputableSpace& space) {
  ComputableProfile profile;
  profile.coincidence_points = pair.f.equal_set(pair.g);
  profile.points_of_coincidence = pair.g.image(profile.coincidence_points);
  profile.common_fixed_points = pair.f.fixed_set().intersect(pair.g.fixed_set());
  (void)space;
  return profile;
}

CommutingProfile commuting_profile(const FiniteMappingPair& pair,
                                   const FiniteSpace& space) {
  CommutingProfile out;
  out.commuting = out.weakly_commuting = out.weakly_compatible = true;
  int n = space.size();
  for (int u = 0; u < n; ++u) {
    int fgu = pair.f[pair.g[u]];
    int gfu = pair.g[pair.f[u]];
    if (fgu != gfu && !out.commuting_witness) {
      out.commuting = false;
      out.commuting_witness = space.labels[u];
    }
    if (space.d(fgu, gfu) > space.d(pair.f[u], pair.g[u]) && !out.weakly_commuting_witness) {
      out.weakly_commuting = false;
      out.weakly_commuting_witness = space.labels[u];
    }
    if (pair.f[u] == pair.g[u] && fgu != gfu && !out.weakly_compatible_witness) {
      out.weakly_compatible = false;
      out.weakly_compatible_witness = space.labels[u];
    }
  }
  return out;
}

std::optional<std::vector<Rat>> coincidence_values_exact(const CMappingPair& pair) {
  std::vector<Rat> values;
  for (const auto& a : pair.f.pieces()) {
    for (const auto& b : pair.g.pieces()) {
      Region common = a.cell.intersect(b.cell);
      if (common.empty()) continue;
      if (a.rule.scale == b.rule.scale) {
        if (a.rule.offset != b.rule.offset) continue;
        if (a.rule.is_constant()) {
          values.push_back(a.rule.offset);
        } else if (common.is_finite_point_set()) {
          for (const Rat& p : common.finite_points()) values.push_back(a.rule.apply(p));
        } else {
          return std::nullopt;  // a whole segment of distinct values
        }
      } else {
        Rat x = (b.rule.offset - a.rule.offset) / (a.rule.scale - b.rule.scale);
        if (!common.intersect(Region::point(x)).empty()) {
          values.push_back(a.rule.apply(x));
        }
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

CommutingProfile commuting_profile(const CMappingPair& pair, const ComputableSpace& space,
                                   std::size_t sample_budget) {
  CommutingProfile out;
  out.commuting = out.weakly_commuting = out.weakly_compatible = true;
  out.sampled = true;

  // Commutation at coincidence points reduces to f(v) == g(v) at the values
  // v attained there; exact whenever those values form a finite set.
  std::vector<Rat> coincidence_values;
  if (auto exact = coincidence_values_exact(pair)) {
    coincidence_values = *exact;
  } else {
    out.weakly_compatible_exact = false;
    Region coincidence = pair.f.equal_set(pair.g);
    for (const Rat& p : coincidence.rationals().sample(sample_budget)) {
      coincidence_values.push_back(pair.f.eval(p));
    }
  }
  for (const Rat& v : coincidence_values) {
    if (pair.f.eval(v) != pair.g.eval(v)) {
      out.weakly_compatible = false;
      out.weakly_compatible_witness = "value " + rat_str(v);
      break;
    }
  }

  // Global flags on a rational sample (coincidence values first so the flag
  // chain stays monotone at witness level).
  std::vector<Rat> samples;
  for (const Rat& v : coincidence_values) {
    if (space.carrier.contains(v)) samples.push_back(v);
  }
  std::vector<Rat> grid = space.carrier.rationals().sample(sample_budget);
  samples.insert(samples.end(), grid.begin(), grid.end());
  for (const Rat& u : samples) {
    Rat fgu = pair.f.eval(pair.g.eval(u));
    Rat gfu = pair.g.eval(pair.f.eval(u));
    if (fgu != gfu && !out.commuting_witness) {
      out.commuting = false;
      out.commuting_witness = rat_str(u);
    }
    Rat lhs = space.d(fgu, gfu);
    Rat rhs = space.d(pair.f.eval(u), pair.g.eval(u));
    if (lhs > rhs && !out.weakly_commuting_witness) {
      out.weakly_commuting = false;
      out.weakly_commuting_witness = rat_str(u);
    }
  }
  if (!out.weakly_compatible && out.commuting) {
    // A coincidence-point violation also falsifies the stronger notions.
    out.commuting = false;
    out.commuting_witness = out.weakly_compatible_witness;
  }
  return out;
}

std::optional<std::pair<int, int>> fg_closed_violation(const FiniteRelation& r,
                                                       const FiniteMappingPair& pair,
                                                       int carrier_size) {
  for (int u = 0; u < carrier_size; ++u) {
    for (int v = 0; v < carrier_size; ++v) {
      if (r.member(pair.g[u], pair.g[v]) && !r.member(pair.f[u], pair.f[v])) {
        return std::make_pair(u, v);
      }
    }
  }
  return std::nullopt;
}

std::vector<int> g_section(const std::vector<int>& g) {
  std::map<int, int> first_preimage;
  for (int u = 0; u < static_cast<int>(g.size()); ++u) {
    first_preimage.try_emplace(g[u], u);
  }
  std::vector<int> section;
  for (const auto& [value, u] : first_preimage) section.push_back(u);
  std::sort(section.begin(), section.end());
  return section;
}

}  // namespace relfix
