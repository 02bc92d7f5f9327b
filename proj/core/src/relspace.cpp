#include "relfix/relspace.hpp"

#include <algorithm>

namespace relfix {

FiniteRelation symmetric_closure(const FiniteRelation& r) {
  FiniteRelation s = r;
  for (const auto& [u, v] : r.pairs) s.pairs.insert({v, u});
  return s;
}

bool comparable(const FiniteRelation& r, int u, int v) {
  return r.member(u, v) || r.member(v, u);
}

bool CRelation::member_base(const Rat& x, const Rat& y) const {
  switch (kind) {
    case CRelKind::Universal:
      return true;
    case CRelKind::Cone:
      return (x >= y && y >= 0) || (x <= y && y <= 0);
    case CRelKind::List:
      for (const auto& [a, b] : pairs) {
        if (a == x && b == y) return true;
      }
      return false;
  }
  return false;
}

bool CRelation::member(const Rat& x, const Rat& y) const {
  if (member_base(x, y)) return true;
  return symmetrized && member_base(y, x);
}

std::vector<std::pair<Rat, Rat>> CRelation::materialized_pairs() const {
  std::vector<std::pair<Rat, Rat>> out = pairs;
  if (symmetrized) {
    for (const auto& [a, b] : pairs) out.emplace_back(b, a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CRelation symmetric_closure(const CRelation& r) {
  CRelation s = r;
  s.symmetrized = true;
  return s;
}

bool comparable(const CRelation& r, const Rat& x, const Rat& y) {
  return r.member(x, y) || r.member(y, x);
}

std::optional<int> FiniteSpace::label_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

bool FiniteSpace::in_subspace(int u) const {
  if (!subspace) return true;
  return std::binary_search(subspace->begin(), subspace->end(), u);
}

std::string point_name(const RelationalSpace& space, const Point& p) {
  switch (p.kind) {
    case Point::Kind::Index:
      return space.is_finite() ? space.finite().labels[p.index]
                               : "#" + std::to_string(p.index);
    case Point::Kind::Value:
      return rat_str(p.value);
    case Point::Kind::IrrationalSpan:
      return "irrational(" + rat_str(p.span_lo) + "," + rat_str(p.span_hi) + ")";
  }
  return "?";
}

std::optional<std::pair<int, int>> complete_relation_violation(
    const FiniteRelation& r, const std::vector<int>& domain) {
  for (int u : domain) {
    for (int v : domain) {
      if (!comparable(r, u, v)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Rat, Rat>> complete_relation_violation(
    const CRelation& r, const std::vector<Rat>& domain) {
  for (const Rat& u : domain) {
    for (const Rat& v : domain) {
      if (!comparable(r, u, v)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> directed_violation(const FiniteRelation& r,
                                                      const std::vector<int>& domain,
                                                      int carrier_size,
                                                      const std::vector<int>* g) {
  for (int u : domain) {
    for (int v : domain) {
      bool served = false;
      for (int w = 0; w < carrier_size && !served; ++w) {
        int gw = g ? (*g)[w] : w;
        served = r.member(u, gw) && r.member(v, gw);
      }
      if (!served) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Rat, Rat>> directed_violation(
    const CRelation& r, const std::vector<Rat>& domain,
    const std::vector<Rat>& candidate_g_values) {
  for (const Rat& u : domain) {
    for (const Rat& v : domain) {
      bool served = false;
      for (const Rat& gw : candidate_g_values) {
        if (r.member(u, gw) && r.member(v, gw)) {
          served = true;
          break;
        }
      }
      if (!served) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

MetricAxiomReport metric_axioms_check(const FiniteSpace& space) {
  MetricAxiomReport report;
  using V = MetricAxiomReport::Violation;
  int n = space.size();
  for (int u = 0; u < n; ++u) {
    if (space.d(u, u) != 0) {
      report.violations.push_back(
          {V::Kind::Diagonal, u, u, -1, "d(" + space.labels[u] + "," + space.labels[u] + ") != 0"});
    }
    for (int v = 0; v < n; ++v) {
      ++report.checked;
      if (u != v && space.d(u, v) <= 0) {
        report.violations.push_back(
            {V::Kind::Positivity, u, v, -1,
             "d(" + space.labels[u] + "," + space.labels[v] + ") <= 0"});
      }
      if (u < v && space.d(u, v) != space.d(v, u)) {
        report.violations.push_back(
            {V::Kind::Symmetry, u, v, -1,
             "d(" + space.labels[u] + "," + space.labels[v] + ") != d(" +
                 space.labels[v] + "," + space.labels[u] + ")"});
      }
      for (int w = 0; w < n; ++w) {
        Rat lhs = space.d(u, v);
        Rat rhs = space.d(u, w) + space.d(w, v);
        if (lhs > rhs) {
          report.violations.push_back(
              {V::Kind::Triangle, u, v, w,
               "d(" + space.labels[u] + "," + space.labels[v] + ") > d(" +
                   space.labels[u] + "," + space.labels[w] + ") + d(" +
                   space.labels[w] + "," + space.labels[v] + ")"});
        }
      }
    }
  }
  return report;
}

MetricAxiomReport metric_axioms_check(const ComputableSpace& space,
                                      std::size_t grid_size) {
  MetricAxiomReport report;
  report.exhaustive = false;
  std::vector<Rat> grid = space.carrier.rationals().sample(grid_size);
  using V = MetricAxiomReport::Violation;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      ++report.checked;
      if (space.d(grid[i], grid[j]) != space.d(grid[j], grid[i])) {
        report.violations.push_back({V::Kind::Symmetry, -1, -1, -1,
                                     "asymmetry at (" + rat_str(grid[i]) + "," +
                                         rat_str(grid[j]) + ")"});
      }
      if (i != j && space.d(grid[i], grid[j]) <= 0) {
        report.violations.push_back({V::Kind::Positivity, -1, -1, -1,
                                     "nonpositive distance at (" + rat_str(grid[i]) +
                                         "," + rat_str(grid[j]) + ")"});
      }
      for (std::size_t k = 0; k < grid.size(); ++k) {
        if (space.d(grid[i], grid[j]) >
            space.d(grid[i], grid[k]) + space.d(grid[k], grid[j])) {
          report.violations.push_back({V::Kind::Triangle, -1, -1, -1,
                                       "triangle violation at (" + rat_str(grid[i]) +
                                           "," + rat_str(grid[j]) + "," +
                                           rat_str(grid[k]) + ")"});
        }
      }
    }
  }
  return report;
}

}  // namespace relfix
