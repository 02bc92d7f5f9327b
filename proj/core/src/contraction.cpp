#include "relfix/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace relfix {

ComparisonFunction ComparisonFunction::linear(Rat coefficient) {
  ComparisonFunction phi;
  phi.kind = PhiKind::Linear;
  phi.k = std::move(coefficient);
  return phi;
}

Rat ComparisonFunction::apply(const Rat& t) const {
  if (kind == PhiKind::Linear) return Rat(k * t);
  if (table.empty()) throw std::invalid_argument("tabulated phi without breakpoints");
  if (t <= table.front().first) {
    // Interpolate towards the origin; phi(0) = 0 keeps the family anchored.
    const auto& [x0, y0] = table.front();
    if (x0 == 0) return y0;
    return Rat(y0 * t / x0);
  }
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (t <= table[i].first) {
      const auto& [x0, y0] = table[i - 1];
      const auto& [x1, y1] = table[i];
      return Rat(y0 + (y1 - y0) * (t - x0) / (x1 - x0));
    }
  }
  const auto& [x0, y0] = table[table.size() - 2];
  const auto& [x1, y1] = table.back();
  Rat slope = (y1 - y0) / (x1 - x0);
  return Rat(y1 + slope * (t - x1));
}

Rat ComparisonFunction::iterate(const Rat& t, unsigned long n) const {
  if (kind == PhiKind::Linear) return Rat(rat_pow(k, n) * t);
  Rat value = t;
  for (unsigned long i = 0; i < n; ++i) value = apply(value);
  return value;
}

PhiValidation validate_phi(const ComparisonFunction& phi, const std::vector<Rat>& grid,
                           int horizon, const Rat& tol) {
  PhiValidation out;
  if (phi.kind == PhiKind::Linear) {
    if (phi.k < 0 || phi.k >= 1) {
      out.failures.push_back("linear coefficient outside [0,1): " + rat_str(phi.k));
      return out;
    }
    out.summability_exact = true;  // geometric series
  } else {
    if (phi.table.size() < 2) {
      out.failures.push_back("tabulated phi needs at least two breakpoints");
      return out;
    }
    for (std::size_t i = 1; i < phi.table.size(); ++i) {
      if (phi.table[i].first <= phi.table[i - 1].first) {
        out.failures.push_back("breakpoint abscissae not increasing");
        return out;
      }
      if (phi.table[i].second < phi.table[i - 1].second) {
        out.failures.push_back("table not increasing at t=" +
                               rat_str(phi.table[i].first));
      }
    }
    if (phi.tail_ratio <= 0 || phi.tail_ratio >= 1) {
      out.failures.push_back("declared tail ratio outside (0,1)");
    }
  }

  std::vector<Rat> sorted_grid;
  for (const Rat& s : grid) {
    if (s > 0) sorted_grid.push_back(s);
  }
  std::sort(sorted_grid.begin(), sorted_grid.end());
  for (std::size_t i = 1; i < sorted_grid.size(); ++i) {
    if (phi.apply(sorted_grid[i - 1]) > Rat(phi.apply(sorted_grid[i]) + tol)) {
      out.failures.push_back("not increasing between s=" + rat_str(sorted_grid[i - 1]) +
                             " and s=" + rat_str(sorted_grid[i]));
    }
  }
  for (const Rat& s : sorted_grid) {
    Rat image = phi.apply(s);
    if (image >= s) {
      out.failures.push_back("phi(s) >= s at s=" + rat_str(s));
    }
    if (phi.kind == PhiKind::Tabulated) {
      // Check the declared geometric dominator along the iterate orbit.
      Rat current = phi.iterate(s, static_cast<unsigned long>(phi.tail_from));
      for (int n = phi.tail_from; n < horizon; ++n) {
        Rat next = phi.apply(current);
        if (next > Rat(phi.tail_ratio * current) + tol) {
          out.failures.push_back("declared tail ratio violated at s=" + rat_str(s) +
                                 ", iterate " + std::to_string(n));
          break;
        }
        current = next;
      }
    }
  }
  std::sort(out.failures.begin(), out.failures.end());
  out.failures.erase(std::unique(out.failures.begin(), out.failures.end()),
                     out.failures.end());
  out.valid = out.failures.empty();
  return out;
}

Rat m_functional(const Rat& d_gu_gv, const Rat& d_gu_fu, const Rat& d_gv_fv,
                 const Rat& d_gu_fv, const Rat& d_gv_fu) {
  Rat mixed = (d_gu_fv + d_gv_fu) / 2;
  Rat best = d_gu_gv;
  if (d_gu_fu > best) best = d_gu_fu;
  if (d_gv_fv > best) best = d_gv_fv;
  if (mixed > best) best = mixed;
  return best;
}

Rat n_functional(const Rat& d_gu_gv, const Rat& d_gu_fu, const Rat& d_gv_fv,
                 const Rat& d_gu_fv, const Rat& d_gv_fu) {
  Rat own = (d_gu_fu + d_gv_fv) / 2;
  Rat mixed = (d_gu_fv + d_gv_fu) / 2;
  Rat best = d_gu_gv;
  if (own > best) best = own;
  if (mixed > best) best = mixed;
  return best;
}

namespace {

// Image values of a point under both maps of a computable pair.
struct ImagePair {
  Rat f, g;
};

ImagePair images_at(const CMappingPair& pair, const Point& p) {
  switch (p.kind) {
    case Point::Kind::Value:
      return {pair.f.eval(p.value), pair.g.eval(p.value)};
    case Point::Kind::IrrationalSpan: {
      auto f = pair.f.eval_irrational(p.span_lo, p.span_hi);
      auto g = pair.g.eval_irrational(p.span_lo, p.span_hi);
      if (!f || !g) {
        throw std::invalid_argument(
            "maps are not constant on the named irrational class");
      }
      return {*f, *g};
    }
    case Point::Kind::Index:
      break;
  }
  throw std::invalid_argument("finite index used with a computable carrier");
}

}  // namespace

Rat m_value(const FiniteMappingPair& pair, const FiniteSpace& space, int u, int v) {
  int fu = pair.f[u], gu = pair.g[u], fv = pair.f[v], gv = pair.g[v];
  return m_functional(space.d(gu, gv), space.d(gu, fu), space.d(gv, fv),
                      space.d(gu, fv), space.d(gv, fu));
}

Rat n_value(const FiniteMappingPair& pair, const FiniteSpace& space, int u, int v) {
  int fu = pair.f[u], gu = pair.g[u], fv = pair.f[v], gv = pair.g[v];
  return n_functional(space.d(gu, gv), space.d(gu, fu), space.d(gv, fv),
                      space.d(gu, fv), space.d(gv, fu));
}

Rat m_value(const CMappingPair& pair, const ComputableSpace& space, const Point& u,
            const Point& v) {
  ImagePair iu = images_at(pair, u), iv = images_at(pair, v);
  return m_functional(space.d(iu.g, iv.g), space.d(iu.g, iu.f), space.d(iv.g, iv.f),
                      space.d(iu.g, iv.f), space.d(iv.g, iu.f));
}

Rat n_value(const CMappingPair& pair, const ComputableSpace& space, const Point& u,
            const Point& v) {
  ImagePair iu = images_at(pair, u), iv = images_at(pair, v);
  return n_functional(space.d(iu.g, iv.g), space.d(iu.g, iu.f), space.d(iv.g, iv.f),
                      space.d(iu.g, iv.f), space.d(iv.g, iu.f));
}

std::string variant_label(Variant v) {
  switch (v) {
    case Variant::MType: return "m";
    case Variant::NType: return "q";
    case Variant::Linear: return "j";
    case Variant::ScaledN: return "q1";
    case Variant::HardyRogers: return "q2";
    case Variant::Kannan: return "q3";
    case Variant::Chatterjea: return "q4";
    case Variant::UniversalN: return "B";
  }
  return "?";
}

std::optional<Variant> variant_from_label(const std::string& label) {
  if (label == "m") return Variant::MType;
  if (label == "q") return Variant::NType;
  if (label == "j") return Variant::Linear;
  if (label == "q1") return Variant::ScaledN;
  if (label == "q2") return Variant::HardyRogers;
  if (label == "q3") return Variant::Kannan;
  if (label == "q4") return Variant::Chatterjea;
  if (label == "B") return Variant::UniversalN;
  return std::nullopt;
}

void ContractionCondition::validate_constants() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  switch (variant) {
    case Variant::MType:
    case Variant::NType:
    case Variant::UniversalN:
      if (!phi) fail("variant requires a comparison function");
      break;
    case Variant::Linear:
      if (alpha < 0 || alpha >= 1) fail("alpha outside [0,1)");
      break;
    case Variant::ScaledN:
      if (k < 0 || k >= 1) fail("k outside [0,1)");
      break;
    case Variant::HardyRogers:
      if (a < 0 || b < 0 || c < 0 || Rat(a + 2 * b + 2 * c) >= 1)
        fail("Hardy-Rogers constants need a,b,c >= 0 and a+2b+2c < 1");
      break;
    case Variant::Kannan:
    case Variant::Chatterjea:
      if (k < 0 || k >= Rat(1, 2)) fail("k outside [0,1/2)");
      break;
  }
}

namespace {

// Right-hand side of the selected condition from the five image distances.
Rat condition_bound(const ContractionCondition& cond, const Rat& d_gu_gv,
                    const Rat& d_gu_fu, const Rat& d_gv_fv, const Rat& d_gu_fv,
                    const Rat& d_gv_fu) {
  switch (cond.variant) {
    case Variant::MType:
      return cond.phi->apply(
          m_functional(d_gu_gv, d_gu_fu, d_gv_fv, d_gu_fv, d_gv_fu));
    case Variant::NType:
    case Variant::UniversalN:
      return cond.phi->apply(
          n_functional(d_gu_gv, d_gu_fu, d_gv_fv, d_gu_fv, d_gv_fu));
    case Variant::Linear:
      return Rat(cond.alpha * d_gu_gv);
    case Variant::ScaledN:
      return Rat(cond.k * n_functional(d_gu_gv, d_gu_fu, d_gv_fv, d_gu_fv, d_gv_fu));
    case Variant::HardyRogers:
      return Rat(cond.a * d_gu_gv + cond.b * (d_gu_fu + d_gv_fv) +
                 cond.c * (d_gu_fv + d_gv_fu));
    case Variant::Kannan:
      return Rat(cond.k * (d_gu_fu + d_gv_fv));
    case Variant::Chatterjea:
      return Rat(cond.k * (d_gu_fv + d_gv_fu));
  }
  return Rat(0);
}

// Generic scan: the callback enumerates candidate pairs as image-value
// tuples plus display names; quantification filter already applied.
struct PairCase {
  std::string u_name, v_name;
  Rat d_fu_fv;
  Rat d_gu_gv, d_gu_fu, d_gv_fv, d_gu_fv, d_gv_fu;
};

ContractionOutcome scan_cases(const ContractionCondition& cond,
                              const std::vector<PairCase>& cases, bool exhaustive) {
  ContractionOutcome out;
  out.holds = true;
  out.exhaustive = exhaustive;
  for (const auto& pc : cases) {
    ++out.checked_pairs;
    Rat bound = condition_bound(cond, pc.d_gu_gv, pc.d_gu_fu, pc.d_gv_fv, pc.d_gu_fv,
                                pc.d_gv_fu);
    if (pc.d_fu_fv > bound) {
      out.holds = false;
      out.violation = BindingCase{pc.u_name, pc.v_name, pc.d_fu_fv, bound};
      return out;
    }
    if (bound > 0) {
      // Track the tightest ratio lhs/rhs; ties keep the first case found.
      bool tighter = !out.binding ||
                     Rat(pc.d_fu_fv * out.binding->rhs) > Rat(out.binding->lhs * bound);
      if (tighter) out.binding = BindingCase{pc.u_name, pc.v_name, pc.d_fu_fv, bound};
    }
  }
  return out;
}

}  // namespace

ContractionOutcome check_contraction(const ContractionCondition& cond,
                                     const FiniteMappingPair& pair,
                                     const FiniteSpace& space, const FiniteRelation& r,
                                     CheckMode mode) {
  (void)mode;  // finite scans are always exhaustive
  cond.validate_constants();
  std::vector<PairCase> cases;
  int n = space.size();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      int gu = pair.g[u], gv = pair.g[v];
      if (cond.variant != Variant::UniversalN && !r.member(gu, gv)) continue;
      int fu = pair.f[u], fv = pair.f[v];
      cases.push_back(PairCase{space.labels[u], space.labels[v], space.d(fu, fv),
                               space.d(gu, gv), space.d(gu, fu), space.d(gv, fv),
                               space.d(gu, fv), space.d(gv, fu)});
    }
  }
  return scan_cases(cond, cases, true);
}

ContractionOutcome check_contraction(const ContractionCondition& cond,
                                     const CMappingPair& pair,
                                     const ComputableSpace& space, const CRelation& r,
                                     CheckMode mode, std::size_t sample_budget) {
  cond.validate_constants();

  // A constant f zeroes the left side while every bound is nonnegative.
  bool f_constant = true;
  for (const auto& p : pair.f.pieces()) {
    if (!p.rule.is_constant() || p.rule.offset != pair.f.pieces().front().rule.offset) {
      f_constant = false;
      break;
    }
  }
  if (f_constant && mode != CheckMode::Sampled) {
    ContractionOutcome out;
    out.holds = true;
    out.exhaustive = true;
    out.note = "f is constant: d(fu,fv) = 0 for every pair";
    return out;
  }

  if (mode != CheckMode::Sampled) {
    if (auto quotient = build_quotient(space, pair)) {
      std::vector<PairCase> cases;
      for (const auto& cu : quotient->cells) {
        for (const auto& cv : quotient->cells) {
          if (cond.variant != Variant::UniversalN &&
              !r.member(cu.g_value, cv.g_value))
            continue;
          cases.push_back(PairCase{
              cu.name, cv.name, space.d(cu.f_value, cv.f_value),
              space.d(cu.g_value, cv.g_value), space.d(cu.g_value, cu.f_value),
              space.d(cv.g_value, cv.f_value), space.d(cu.g_value, cv.f_value),
              space.d(cv.g_value, cu.f_value)});
        }
      }
      return scan_cases(cond, cases, true);
    }
    if (mode == CheckMode::Exhaustive) {
      throw std::invalid_argument(
          "exhaustive contraction check needs a finite carrier, a constant f, or a "
          "class-reducible instance");
    }
  }

  // Sampled fallback: rational probes filtered by the relation.
  std::vector<Rat> probes = space.carrier.rationals().sample(sample_budget);
  std::vector<PairCase> cases;
  for (const Rat& u : probes) {
    for (const Rat& v : probes) {
      Rat gu = pair.g.eval(u), gv = pair.g.eval(v);
      if (cond.variant != Variant::UniversalN && !r.member(gu, gv)) continue;
      Rat fu = pair.f.eval(u), fv = pair.f.eval(v);
      cases.push_back(PairCase{rat_str(u), rat_str(v), space.d(fu, fv), space.d(gu, gv),
                               space.d(gu, fu), space.d(gv, fv), space.d(gu, fv),
                               space.d(gv, fu)});
    }
  }
  ContractionOutcome out = scan_cases(cond, cases, false);
  if (out.holds) out.note = "sampled check: not exhaustive";
  return out;
}

bool closure_equivalence_check(const ContractionCondition& cond,
                               const FiniteMappingPair& pair, const FiniteSpace& space,
                               const FiniteRelation& r) {
  ContractionOutcome over_r = check_contraction(cond, pair, space, r);
  ContractionOutcome over_closure =
      check_contraction(cond, pair, space, symmetric_closure(r));
  return over_r.holds == over_closure.holds;
}

}  // namespace relfix
