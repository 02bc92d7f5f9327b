#include "relfix/certifier.hpp"

#include "relfix/oracle.hpp"
#include "relfix/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace relfix {

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Th1: return "th1";
    case TheoremId::Th2: return "th2";
    case TheoremId::Th3: return "th3";
    case TheoremId::Th4: return "th4";
    case TheoremId::Cor0: return "cor0";
    case TheoremId::Cor2: return "cor2";
    case TheoremId::Cor5: return "cor5";
    case TheoremId::Cor6: return "cor6";
    case TheoremId::Cor8: return "cor8";
    case TheoremId::Cor9: return "cor9";
    case TheoremId::Cor10: return "cor10";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  if (name == "th1") return TheoremId::Th1;
  if (name == "th2") return TheoremId::Th2;
  if (name == "th3") return TheoremId::Th3;
  if (name == "th4") return TheoremId::Th4;
  if (name == "cor0") return TheoremId::Cor0;
  if (name == "cor2") return TheoremId::Cor2;
  if (name == "cor5") return TheoremId::Cor5;
  if (name == "cor6") return TheoremId::Cor6;
  if (name == "cor8") return TheoremId::Cor8;
  if (name == "cor9") return TheoremId::Cor9;
  if (name == "cor10") return TheoremId::Cor10;
  return std::nullopt;
}

std::string verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Holds: return "holds";
    case VerdictKind::TriviallyHolds: return "trivially-holds";
    case VerdictKind::AssertedHolds: return "asserted-holds";
    case VerdictKind::HoldsOnSamples: return "holds-on-samples";
    case VerdictKind::Fails: return "fails";
    case VerdictKind::AssertedFails: return "asserted-fails";
    case VerdictKind::Undecidable: return "undecidable";
  }
  return "?";
}

Verdict Verdict::holds(std::string detail) {
  Verdict v;
  v.kind = VerdictKind::Holds;
  v.detail = std::move(detail);
  return v;
}
Verdict Verdict::trivially(std::string detail) {
  Verdict v;
  v.kind = VerdictKind::TriviallyHolds;
  v.detail = std::move(detail);
  return v;
}
Verdict Verdict::fails(std::string detail, std::vector<std::string> witness) {
  Verdict v;
  v.kind = VerdictKind::Fails;
  v.detail = std::move(detail);
  v.witness = std::move(witness);
  return v;
}
Verdict Verdict::undecidable(std::string detail) {
  Verdict v;
  v.kind = VerdictKind::Undecidable;
  v.detail = std::move(detail);
  return v;
}

const Verdict* HypothesisReport::find(const std::string& label) const {
  for (const auto& e : entries) {
    if (e.label == label) return &e.verdict;
  }
  return nullptr;
}

Verdict r_complete_finite(const FiniteSpace& space) {
  (void)space;
  return Verdict::trivially(
      "finite carrier: every Cauchy sequence is eventually constant, hence convergent");
}

Verdict d_self_closed_finite(const FiniteSpace& space, const FiniteRelation& r,
                             const std::vector<int>* g) {
  if (!g) {
    return Verdict::trivially(
        "finite carrier: a convergent R-preserving sequence has a constant tail at its "
        "limit u with (u,u) in R");
  }
  for (int u = 0; u < space.size(); ++u) {
    if (r.member(u, u) && !r.member((*g)[u], (*g)[u])) {
      return Verdict::fails("(u,u) in R but (gu,gu) not in R at u = " + space.labels[u],
                            {space.labels[u]});
    }
  }
  return Verdict::holds("(u,u) in R implies (gu,gu) in R for every u");
}

Verdict r_compatible_finite(const FiniteSpace& space, const FiniteRelation& r,
                            const FiniteMappingPair& pair) {
  for (int u = 0; u < space.size(); ++u) {
    if (pair.f[u] != pair.g[u]) continue;
    int v = pair.f[u];
    if (r.member(v, v) && pair.f[v] != pair.g[v]) {
      return Verdict::fails(
          "point of coincidence v = " + space.labels[v] +
              " has (v,v) in R but f(v) != g(v): the constant sequence at " +
              space.labels[u] + " violates compatibility",
          {space.labels[v]});
    }
  }
  return Verdict::holds(
      "every point of coincidence v with (v,v) in R satisfies f(v) = g(v)");
}

namespace {

std::vector<Rat> default_phi_grid() {
  std::vector<Rat> grid;
  for (int j = 1; j <= 100; ++j) {
    Rat s(j, 10);
    s.canonicalize();
    grid.push_back(s);
  }
  return grid;
}

Verdict apply_assertion(Verdict computed, const AssertionMap& asserted,
                        const std::string& label) {
  auto it = asserted.find(label);
  if (it == asserted.end()) return computed;
  bool overridable = computed.kind == VerdictKind::Undecidable ||
                     computed.kind == VerdictKind::HoldsOnSamples;
  if (!overridable) return computed;
  Verdict v;
  v.kind = it->second ? VerdictKind::AssertedHolds : VerdictKind::AssertedFails;
  v.detail = "externally asserted";
  if (!computed.detail.empty()) v.detail += "; " + computed.detail;
  return v;
}

Verdict verdict_from_contraction(const ContractionOutcome& out) {
  Verdict v;
  if (out.holds) {
    v.kind = out.exhaustive ? VerdictKind::Holds : VerdictKind::HoldsOnSamples;
    v.detail = out.note;
    v.samples = out.checked_pairs;
    v.binding = out.binding;
  } else {
    v.kind = VerdictKind::Fails;
    v.binding = out.violation;
    v.witness = {out.violation->u, out.violation->v};
    v.detail = "d(fu,fv) = " + rat_str(out.violation->lhs) + " exceeds bound " +
               rat_str(out.violation->rhs) + " at (" + out.violation->u + ", " +
               out.violation->v + ")";
  }
  return v;
}

// Contraction variant actually evaluated for a theorem, with conversions
// where a corollary fixes the shape. Throws on true mismatches.
ContractionCondition resolve_condition(TheoremId th, const ContractionCondition& given,
                                       std::string* label) {
  auto as_n_type = [&](bool universal) -> ContractionCondition {
    ContractionCondition out;
    out.variant = universal ? Variant::UniversalN : Variant::NType;
    switch (given.variant) {
      case Variant::MType:
      case Variant::NType:
      case Variant::UniversalN:
        out.phi = given.phi;
        break;
      case Variant::Linear:
        out.phi = ComparisonFunction::linear(given.alpha);
        break;
      case Variant::ScaledN:
        out.phi = ComparisonFunction::linear(given.k);
        break;
      case Variant::HardyRogers:
        out.phi = ComparisonFunction::linear(Rat(given.a + 2 * given.b + 2 * given.c));
        break;
      case Variant::Kannan:
      case Variant::Chatterjea:
        out.phi = ComparisonFunction::linear(Rat(2 * given.k));
        break;
    }
    return out;
  };

  switch (th) {
    case TheoremId::Th1:
    case TheoremId::Th3:
    case TheoremId::Th4:
    case TheoremId::Cor0:
      *label = variant_label(given.variant);
      return given;
    case TheoremId::Th2:
    case TheoremId::Cor2:
      *label = "q";
      return as_n_type(false);
    case TheoremId::Cor5: {
      *label = "q1";
      if (given.variant == Variant::ScaledN) return given;
      // A linear comparison function supplies the coefficient directly.
      if ((given.variant == Variant::NType || given.variant == Variant::MType ||
           given.variant == Variant::UniversalN) &&
          given.phi && given.phi->kind == PhiKind::Linear) {
        ContractionCondition out;
        out.variant = Variant::ScaledN;
        out.k = given.phi->k;
        return out;
      }
      throw std::invalid_argument("cor5 requires the scaled-N condition (q1)");
    }
    case TheoremId::Cor6:
      *label = "q2";
      if (given.variant != Variant::HardyRogers)
        throw std::invalid_argument("cor6 requires the Hardy-Rogers condition (q2)");
      return given;
    case TheoremId::Cor8:
      *label = "q3";
      if (given.variant != Variant::Kannan)
        throw std::invalid_argument("cor8 requires the Kannan condition (q3)");
      return given;
    case TheoremId::Cor9:
      *label = "q4";
      if (given.variant != Variant::Chatterjea)
        throw std::invalid_argument("cor9 requires the Chatterjea condition (q4)");
      return given;
    case TheoremId::Cor10:
      *label = "B";
      return as_n_type(true);
  }
  throw std::invalid_argument("unknown theorem");
}

// Validates an attached comparison function; a candidate outside the family
// refutes the hypothesis rather than the input.
std::optional<Verdict> phi_rejection(const ContractionCondition& cond) {
  if (!cond.phi) return std::nullopt;
  PhiValidation validation = validate_phi(*cond.phi, default_phi_grid(), 24, Rat(0));
  if (validation.valid) return std::nullopt;
  Verdict v = Verdict::fails("comparison function is not in the family");
  v.witness = validation.failures;
  return v;
}

// ---------------------------------------------------------------------------
// Finite-space hypothesis verdicts
// ---------------------------------------------------------------------------

struct FiniteCtx {
  const FiniteSpace& space;
  const FiniteMappingPair& pair;
};

std::vector<int> image_values(const std::vector<int>& map) {
  std::vector<int> out = map;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict fin_condition_g(const FiniteCtx& ctx) {
  for (int u = 0; u < ctx.space.size(); ++u) {
    int fu = ctx.pair.f[u];
    bool in_gx = std::find(ctx.pair.g.begin(), ctx.pair.g.end(), fu) != ctx.pair.g.end();
    if (!ctx.space.in_subspace(fu) || !in_gx) {
      return Verdict::fails("f(" + ctx.space.labels[u] + ") = " + ctx.space.labels[fu] +
                                " is outside Y n g(X)",
                            {ctx.space.labels[u]});
    }
  }
  return Verdict::holds("f(X) is contained in Y n g(X)");
}

Verdict fin_condition_h(const FiniteCtx& ctx) {
  if (auto w0 = find_starting_point(ctx.space, ctx.pair)) {
    return Verdict::holds("(g(w0), f(w0)) in R at w0 = " + ctx.space.labels[*w0]);
  }
  return Verdict::fails("no w0 with (g(w0), f(w0)) in R");
}

Verdict fin_condition_i(const FiniteCtx& ctx) {
  if (auto bad = fg_closed_violation(ctx.space.relation, ctx.pair, ctx.space.size())) {
    return Verdict::fails("(gu,gv) in R but (fu,fv) not in R at (u,v) = (" +
                              ctx.space.labels[bad->first] + ", " +
                              ctx.space.labels[bad->second] + ")",
                          {ctx.space.labels[bad->first], ctx.space.labels[bad->second]});
  }
  return Verdict::holds("R is (f,g)-closed");
}

Verdict fin_condition_k1(const FiniteCtx& ctx) {
  for (int y = 0; y < ctx.space.size(); ++y) {
    if (!ctx.space.in_subspace(y)) continue;
    if (std::find(ctx.pair.g.begin(), ctx.pair.g.end(), y) == ctx.pair.g.end()) {
      return Verdict::fails("Y member " + ctx.space.labels[y] + " is outside g(X)",
                            {ctx.space.labels[y]});
    }
  }
  return Verdict::holds("Y is contained in g(X)");
}

Verdict fin_condition_r(const FiniteCtx& ctx) {
  std::vector<int> fx = image_values(ctx.pair.f);
  FiniteRelation closure = symmetric_closure(ctx.space.relation);
  if (auto bad = directed_violation(closure, fx, ctx.space.size(), &ctx.pair.g)) {
    return Verdict::fails("no w with [u,gw] and [v,gw] in R for (u,v) = (" +
                              ctx.space.labels[bad->first] + ", " +
                              ctx.space.labels[bad->second] + ")",
                          {ctx.space.labels[bad->first], ctx.space.labels[bad->second]});
  }
  return Verdict::holds("f(X) is (g,R^s)-directed");
}

Verdict fin_condition_s(const FiniteCtx& ctx) {
  auto injective = [&](const std::vector<int>& map) {
    std::vector<int> values = map;
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
  };
  if (injective(ctx.pair.f)) return Verdict::holds("f is one-to-one");
  if (injective(ctx.pair.g)) return Verdict::holds("g is one-to-one");
  return Verdict::fails("neither f nor g is one-to-one");
}

Verdict fin_condition_t(const FiniteCtx& ctx) {
  std::vector<int> fx = image_values(ctx.pair.f);
  if (auto bad = complete_relation_violation(ctx.space.relation, fx)) {
    return Verdict::fails("incomparable pair in f(X): (" + ctx.space.labels[bad->first] +
                              ", " + ctx.space.labels[bad->second] + ")",
                          {ctx.space.labels[bad->first], ctx.space.labels[bad->second]});
  }
  return Verdict::holds("R restricted to f(X) is complete");
}

Verdict fin_condition_o(const FiniteCtx& ctx) {
  for (int u = 0; u < ctx.space.size(); ++u) {
    int fu = ctx.pair.f[u];
    if (std::find(ctx.pair.g.begin(), ctx.pair.g.end(), fu) == ctx.pair.g.end()) {
      return Verdict::fails("f(" + ctx.space.labels[u] + ") outside g(X)",
                            {ctx.space.labels[u]});
    }
  }
  return Verdict::holds("f(X) is contained in g(X)");
}

Verdict fin_condition_p(const FiniteCtx& ctx) {
  std::vector<int> gx = image_values(ctx.pair.g);
  if (static_cast<int>(gx.size()) == ctx.space.size()) {
    return Verdict::holds("g is onto");
  }
  for (int y = 0; y < ctx.space.size(); ++y) {
    if (std::find(gx.begin(), gx.end(), y) == gx.end()) {
      return Verdict::fails("g misses " + ctx.space.labels[y], {ctx.space.labels[y]});
    }
  }
  return Verdict::fails("g is not onto");
}

Verdict fin_condition_A(const FiniteCtx& ctx) {
  Verdict inclusion = fin_condition_o(ctx);
  if (inclusion.kind != VerdictKind::Holds) return inclusion;
  return Verdict::holds("Y = f(X) works: finite subspaces are complete");
}

Verdict fin_condition_wc(const FiniteCtx& ctx) {
  CommutingProfile profile = commuting_profile(ctx.pair, ctx.space);
  if (profile.weakly_compatible) {
    return Verdict::holds("(f,g) commute at every coincidence point");
  }
  return Verdict::fails("f(gx) != g(fx) at coincidence point " +
                            *profile.weakly_compatible_witness,
                        {*profile.weakly_compatible_witness});
}

// ---------------------------------------------------------------------------
// Computable-carrier hypothesis verdicts
// ---------------------------------------------------------------------------

struct CompCtx {
  const ComputableSpace& space;
  const CMappingPair& pair;
  CheckOptions options;
  std::optional<Quotient> quotient;
  Region fx, gx;

  CompCtx(const ComputableSpace& s, const CMappingPair& p, const CheckOptions& o)
      : space(s), pair(p), options(o) {
    quotient = build_quotient(s, p);
    fx = p.f.image_all();
    gx = p.g.image_all();
  }
};

// Complete by construction: closed bounded intervals (with their full
// irrational trace) and isolated points.
bool region_complete_by_construction(const Region& region) {
  for (const auto& span : region.rationals().spans()) {
    if (span.lo == span.hi) continue;
    if (span.lo.eps != 0 || span.hi.eps != 0) return false;
    if (!IrrSet::interval(span.lo.x, span.hi.x).subset_of(region.irrationals()))
      return false;
  }
  for (const auto& span : region.irrationals().spans()) {
    bool covered = false;
    for (const auto& qs : region.rationals().spans()) {
      if (qs.lo == qs.hi) continue;
      if (qs.lo.x <= span.lo && span.hi <= qs.hi.x) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

Verdict comp_completeness(const Region& region, const std::string& what) {
  if (region.is_finite_point_set()) {
    return Verdict::trivially(what +
                              " is a finite point set: Cauchy sequences are eventually "
                              "constant");
  }
  if (region_complete_by_construction(region)) {
    return Verdict::holds(what + " is a closed bounded construction, complete for any "
                                 "relation");
  }
  return Verdict::undecidable("R-completeness of " + what +
                              " is sequence-quantified on this carrier");
}

Verdict comp_condition_g(const CompCtx& ctx) {
  Region target = ctx.space.y_region().intersect(ctx.gx);
  Region excess = ctx.fx.subtract(target);
  if (excess.empty()) return Verdict::holds("f(X) is contained in Y n g(X)");
  return Verdict::fails("f(X) escapes Y n g(X) on " + excess.to_text(),
                        {excess.to_text()});
}

Verdict comp_condition_h(const CompCtx& ctx) {
  if (auto w0 = find_starting_point(ctx.space, ctx.pair, ctx.options.probe_budget)) {
    std::string name = w0->kind == Point::Kind::Value
                           ? rat_str(w0->value)
                           : "irrational(" + rat_str(w0->span_lo) + "," +
                                 rat_str(w0->span_hi) + ")";
    return Verdict::holds("(g(w0), f(w0)) in R at w0 = " + name);
  }
  Verdict v = Verdict::undecidable("no admissible starting point among probes");
  v.samples = static_cast<long>(ctx.options.probe_budget);
  return v;
}

Verdict comp_condition_i(const CompCtx& ctx) {
  if (ctx.quotient) {
    for (const auto& cu : ctx.quotient->cells) {
      for (const auto& cv : ctx.quotient->cells) {
        if (ctx.space.relation.member(cu.g_value, cv.g_value) &&
            !ctx.space.relation.member(cu.f_value, cv.f_value)) {
          return Verdict::fails("(gu,gv) in R but (fu,fv) not in R for classes (" +
                                    cu.name + ", " + cv.name + ")",
                                {cu.name, cv.name});
        }
      }
    }
    return Verdict::holds("R is (f,g)-closed (decided on carrier classes)");
  }

  bool f_constant = !ctx.pair.f.pieces().empty();
  Rat c = f_constant ? ctx.pair.f.pieces().front().rule.offset : Rat(0);
  for (const auto& piece : ctx.pair.f.pieces()) {
    if (!piece.rule.is_constant() || piece.rule.offset != c) {
      f_constant = false;
      break;
    }
  }
  std::vector<Rat> probes = ctx.space.carrier.rationals().sample(64);
  if (f_constant) {
    if (ctx.space.relation.member(c, c)) {
      return Verdict::holds("f is constant at " + rat_str(c) + " and (" + rat_str(c) +
                            "," + rat_str(c) + ") is in R");
    }
    for (const Rat& u : probes) {
      for (const Rat& v : probes) {
        if (ctx.space.relation.member(ctx.pair.g.eval(u), ctx.pair.g.eval(v))) {
          return Verdict::fails("(gu,gv) in R at (" + rat_str(u) + "," + rat_str(v) +
                                    ") but (f.,f.) = (" + rat_str(c) + "," + rat_str(c) +
                                    ") is not in R",
                                {rat_str(u), rat_str(v)});
        }
      }
    }
    Verdict v = Verdict::undecidable(
        "f constant with (c,c) outside R; no related pair (gu,gv) found among samples");
    v.kind = VerdictKind::HoldsOnSamples;
    v.samples = static_cast<long>(probes.size() * probes.size());
    return v;
  }

  for (const Rat& u : probes) {
    for (const Rat& v : probes) {
      if (ctx.space.relation.member(ctx.pair.g.eval(u), ctx.pair.g.eval(v)) &&
          !ctx.space.relation.member(ctx.pair.f.eval(u), ctx.pair.f.eval(v))) {
        return Verdict::fails("closedness violated at (" + rat_str(u) + "," +
                                  rat_str(v) + ")",
                              {rat_str(u), rat_str(v)});
      }
    }
  }
  Verdict v;
  v.kind = VerdictKind::HoldsOnSamples;
  v.detail = "no violation among sampled pairs";
  v.samples = static_cast<long>(probes.size() * probes.size());
  return v;
}

Verdict comp_condition_k1(const CompCtx& ctx) {
  Region excess = ctx.space.y_region().subtract(ctx.gx);
  if (excess.empty()) return Verdict::holds("Y is contained in g(X)");
  return Verdict::fails("Y escapes g(X) on " + excess.to_text(), {excess.to_text()});
}

Verdict comp_condition_k2(const CompCtx& ctx) {
  if (ctx.space.y_region().is_finite_point_set()) {
    return Verdict::trivially(
        "R|Y is d-self-closed: Y is a finite point set, so convergent R-preserving "
        "sequences in Y are eventually constant");
  }
  return Verdict::undecidable(
      "continuity / d-self-closedness branches are sequence-quantified here");
}

Verdict comp_condition_r(const CompCtx& ctx) {
  CRelation closure = symmetric_closure(ctx.space.relation);
  std::vector<Rat> domain;
  bool exact_domain = ctx.fx.is_finite_point_set();
  if (exact_domain) {
    domain = ctx.fx.finite_points();
  } else {
    domain = ctx.fx.rationals().sample(16);
  }
  // Candidate successors: g-values of classes plus g over probe points.
  std::vector<Rat> candidates;
  if (ctx.quotient) {
    candidates = ctx.quotient->g_values();
  }
  for (const Rat& w : ctx.space.carrier.rationals().sample(ctx.options.sample_budget)) {
    candidates.push_back(ctx.pair.g.eval(w));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto bad = directed_violation(closure, domain, candidates);
  if (!bad) {
    if (exact_domain) {
      return Verdict::holds("every pair of f(X) has a witnessed common g-successor");
    }
    Verdict v;
    v.kind = VerdictKind::HoldsOnSamples;
    v.detail = "directedness witnessed on sampled members of f(X)";
    return v;
  }
  return Verdict::undecidable("no common successor found for (" + rat_str(bad->first) +
                              ", " + rat_str(bad->second) + ") among " +
                              std::to_string(candidates.size()) + " candidates");
}

Verdict comp_condition_s(const CompCtx& ctx) {
  enum class Injectivity { Yes, No, Unknown };
  std::string note;
  auto injectivity = [&](const CMap& map, const std::string& name) {
    // Constant on a multi-member cell: definitely not injective (two members
    // of the cell share the value).
    for (const auto& piece : map.pieces()) {
      if (!piece.rule.is_constant()) continue;
      bool multi = piece.cell.rationals().sample(2).size() >= 2 ||
                   !piece.cell.irrationals().empty();
      if (multi) {
        note += name + " is constant on a multi-member cell; ";
        return Injectivity::No;
      }
    }
    // All pieces affine with pairwise disjoint images: injective.
    std::vector<Region> images;
    for (const auto& piece : map.pieces()) {
      images.push_back(piece.cell.affine_image(piece.rule.scale, piece.rule.offset));
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        if (!images[i].intersect(images[j]).empty()) return Injectivity::Unknown;
      }
    }
    return Injectivity::Yes;
  };
  Injectivity f_inj = injectivity(ctx.pair.f, "f");
  if (f_inj == Injectivity::Yes) {
    return Verdict::holds("f is one-to-one (affine pieces with disjoint images)");
  }
  Injectivity g_inj = injectivity(ctx.pair.g, "g");
  if (g_inj == Injectivity::Yes) {
    return Verdict::holds("g is one-to-one (affine pieces with disjoint images)");
  }
  if (f_inj == Injectivity::No && g_inj == Injectivity::No) {
    return Verdict::fails("neither f nor g is one-to-one: " + note);
  }
  return Verdict::undecidable("injectivity not decided for either map");
}

Verdict comp_condition_t(const CompCtx& ctx) {
  if (ctx.fx.is_finite_point_set()) {
    if (auto bad = complete_relation_violation(ctx.space.relation, ctx.fx.finite_points())) {
      return Verdict::fails("incomparable pair in f(X): (" + rat_str(bad->first) + ", " +
                                rat_str(bad->second) + ")",
                            {rat_str(bad->first), rat_str(bad->second)});
    }
    return Verdict::holds("R restricted to f(X) is complete");
  }
  if (auto bad = complete_relation_violation(ctx.space.relation,
                                             ctx.fx.rationals().sample(16))) {
    return Verdict::fails("incomparable pair in f(X): (" + rat_str(bad->first) + ", " +
                              rat_str(bad->second) + ")",
                          {rat_str(bad->first), rat_str(bad->second)});
  }
  return Verdict::undecidable("f(X) is infinite; completeness not decided");
}

Verdict comp_condition_o(const CompCtx& ctx) {
  Region excess = ctx.fx.subtract(ctx.gx);
  if (excess.empty()) return Verdict::holds("f(X) is contained in g(X)");
  return Verdict::fails("f(X) escapes g(X) on " + excess.to_text(), {excess.to_text()});
}

Verdict comp_condition_p(const CompCtx& ctx) {
  if (ctx.gx == ctx.space.carrier) return Verdict::holds("g is onto");
  Region missed = ctx.space.carrier.subtract(ctx.gx);
  return Verdict::fails("g misses " + missed.to_text(), {missed.to_text()});
}

Verdict comp_condition_A(const CompCtx& ctx) {
  if (ctx.space.subspace) {
    const Region& y = *ctx.space.subspace;
    if (!ctx.fx.subset_of(y)) return Verdict::fails("f(X) is not contained in Y");
    if (!y.subset_of(ctx.gx)) return Verdict::fails("Y is not contained in g(X)");
    Verdict completeness = comp_completeness(y, "Y");
    if (completeness.certifies()) return completeness;
    return Verdict::undecidable("inclusions hold but completeness of Y is undecided");
  }
  if (!ctx.fx.subset_of(ctx.gx)) return Verdict::fails("f(X) is not contained in g(X)");
  Verdict completeness = comp_completeness(ctx.fx, "f(X)");
  if (completeness.certifies()) {
    Verdict v = Verdict::holds("Y = f(X) works: " + completeness.detail);
    return v;
  }
  return Verdict::undecidable("no declared Y and f(X) completeness undecided");
}

Verdict comp_condition_wc(const CompCtx& ctx) {
  if (auto values = coincidence_values_exact(ctx.pair)) {
    for (const Rat& v : *values) {
      if (ctx.pair.f.eval(v) != ctx.pair.g.eval(v)) {
        return Verdict::fails("f(v) != g(v) at coincidence value v = " + rat_str(v),
                              {rat_str(v)});
      }
    }
    return Verdict::holds("(f,g) commute at every coincidence point");
  }
  CommutingProfile profile =
      commuting_profile(ctx.pair, ctx.space, ctx.options.sample_budget);
  if (!profile.weakly_compatible) {
    return Verdict::fails("weak compatibility fails at " +
                          *profile.weakly_compatible_witness);
  }
  Verdict v;
  v.kind = VerdictKind::HoldsOnSamples;
  v.detail = "commutation checked at sampled coincidence values";
  return v;
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

struct RouteSpec {
  bool frame = false;       // (f),(g),(h),(i),(k)/(l)
  bool cor0_frame = false;  // (n),(o),(h),(i),(p),(k2)/(l)
  bool needs_r = false;
  bool needs_s = false;
  bool needs_t = false;
  bool needs_wc = false;
  bool tier_r_wc = false;  // corollary "moreover" tier: optional (r) + (wc)
  bool cor10 = false;
};

RouteSpec route_for(TheoremId th) {
  RouteSpec r;
  switch (th) {
    case TheoremId::Th1:
    case TheoremId::Cor2:
      r.frame = true;
      break;
    case TheoremId::Th2:
      r.frame = r.needs_r = r.needs_wc = true;
      break;
    case TheoremId::Th3:
      r.frame = r.needs_r = r.needs_s = true;
      break;
    case TheoremId::Th4:
      r.frame = r.needs_t = r.needs_wc = true;
      break;
    case TheoremId::Cor0:
      r.cor0_frame = true;
      break;
    case TheoremId::Cor5:
    case TheoremId::Cor6:
    case TheoremId::Cor8:
    case TheoremId::Cor9:
      r.frame = r.tier_r_wc = true;
      break;
    case TheoremId::Cor10:
      r.cor10 = true;
      break;
  }
  return r;
}

bool entry_certifies(const HypothesisReport& report, const std::string& label) {
  const Verdict* v = report.find(label);
  return v && v->certifies();
}

}  // namespace

HypothesisReport check_theorem(TheoremId theorem, const RelationalSpace& space,
                               const MappingPair& pair,
                               const std::optional<ContractionCondition>& condition,
                               const AssertionMap& asserted, const CheckOptions& options) {
  if (!condition && theorem != TheoremId::Cor10) {
    throw std::invalid_argument("theorem check requires a contraction condition");
  }
  if (!condition) {
    throw std::invalid_argument("cor10 requires a comparison function condition (B)");
  }

  HypothesisReport report;
  report.theorem = theorem;
  RouteSpec route = route_for(theorem);

  std::string cond_label;
  ContractionCondition cond = resolve_condition(theorem, *condition, &cond_label);
  cond.validate_constants();

  auto add = [&](const std::string& label, Verdict v) {
    report.entries.push_back({label, apply_assertion(std::move(v), asserted, label)});
  };

  bool finite = space.is_finite();
  if (finite != pair.is_finite()) {
    throw std::invalid_argument("space and mapping pair kinds do not match");
  }

  if (finite) {
    FiniteCtx ctx{space.finite(), pair.finite()};
    const FiniteSpace& fs = space.finite();
    const FiniteMappingPair& fp = pair.finite();

    Verdict contraction_verdict;
    if (auto rejected = phi_rejection(cond)) {
      contraction_verdict = *rejected;
    } else {
      contraction_verdict =
          verdict_from_contraction(check_contraction(cond, fp, fs, fs.relation));
    }

    if (route.frame) {
      add("f", r_complete_finite(fs));
      add("g", fin_condition_g(ctx));
      add("h", fin_condition_h(ctx));
      add("i", fin_condition_i(ctx));
      add("k1", fin_condition_k1(ctx));
      add("k2", Verdict::trivially("finite carrier: every map is R-continuous and R|Y "
                                   "is d-self-closed (eventual constancy)"));
      add("l1", r_compatible_finite(fs, fs.relation, fp));
      add("l2", Verdict::trivially("finite carrier: g is R-continuous"));
      add("l3", Verdict::trivially("finite carrier: f is R-continuous"));
      add(cond_label, contraction_verdict);
    }
    if (route.cor0_frame) {
      add("n", Verdict::trivially(
                   "finite carrier: X is R-complete (eventual constancy)"));
      add("o", fin_condition_o(ctx));
      add("h", fin_condition_h(ctx));
      add("i", fin_condition_i(ctx));
      add("p", fin_condition_p(ctx));
      add("k2", Verdict::trivially("finite carrier: every map is R-continuous"));
      add("l1", r_compatible_finite(fs, fs.relation, fp));
      add("l2", Verdict::trivially("finite carrier: g is R-continuous"));
      add("l3", Verdict::trivially("finite carrier: f is R-continuous"));
      add(cond_label, contraction_verdict);
    }
    if (route.cor10) {
      add("A", fin_condition_A(ctx));
      add(cond_label, contraction_verdict);
    }
    if (route.needs_r || route.tier_r_wc) add("r", fin_condition_r(ctx));
    if (route.needs_s) add("s", fin_condition_s(ctx));
    if (route.needs_t) add("t", fin_condition_t(ctx));
    if (route.needs_wc || route.tier_r_wc || route.cor10) add("wc", fin_condition_wc(ctx));
  } else {
    CompCtx ctx(space.computable(), pair.computable(), options);

    Verdict contraction_verdict;
    if (auto rejected = phi_rejection(cond)) {
      contraction_verdict = *rejected;
    } else {
      contraction_verdict = verdict_from_contraction(
          check_contraction(cond, ctx.pair, ctx.space, ctx.space.relation,
                            CheckMode::Auto, options.sample_budget));
    }

    if (route.frame) {
      add("f", comp_completeness(ctx.space.y_region(), "Y"));
      add("g", comp_condition_g(ctx));
      add("h", comp_condition_h(ctx));
      add("i", comp_condition_i(ctx));
      add("k1", comp_condition_k1(ctx));
      add("k2", comp_condition_k2(ctx));
      add("l1", Verdict::undecidable("R-compatibility is sequence-quantified here"));
      add("l2", Verdict::undecidable("R-continuity of g is sequence-quantified here"));
      add("l3", Verdict::undecidable("R-continuity of f is sequence-quantified here"));
      add(cond_label, contraction_verdict);
    }
    if (route.cor0_frame) {
      add("n", comp_completeness(ctx.space.carrier, "X"));
      add("o", comp_condition_o(ctx));
      add("h", comp_condition_h(ctx));
      add("i", comp_condition_i(ctx));
      add("p", comp_condition_p(ctx));
      add("k2", comp_condition_k2(ctx));
      add("l1", Verdict::undecidable("R-compatibility is sequence-quantified here"));
      add("l2", Verdict::undecidable("R-continuity of g is sequence-quantified here"));
      add("l3", Verdict::undecidable("R-continuity of f is sequence-quantified here"));
      add(cond_label, contraction_verdict);
    }
    if (route.cor10) {
      add("A", comp_condition_A(ctx));
      add(cond_label, contraction_verdict);
    }
    if (route.needs_r || route.tier_r_wc) add("r", comp_condition_r(ctx));
    if (route.needs_s) add("s", comp_condition_s(ctx));
    if (route.needs_t) add("t", comp_condition_t(ctx));
    if (route.needs_wc || route.tier_r_wc || route.cor10)
      add("wc", comp_condition_wc(ctx));
  }

  // Certification per route.
  auto ok = [&](const std::string& label) { return entry_certifies(report, label); };
  bool base = false;
  if (route.frame) {
    bool k_branch = ok("k1") && ok("k2");
    bool l_branch = ok("l1") && ok("l2") && ok("l3");
    base = ok("f") && ok("g") && ok("h") && ok("i") && ok(cond_label) &&
           (k_branch || l_branch);
  } else if (route.cor0_frame) {
    bool l_branch = ok("l1") && ok("l2") && ok("l3");
    base = ok("n") && ok("o") && ok("h") && ok("i") && ok("p") && ok(cond_label) &&
           (ok("k2") || l_branch);
  } else if (route.cor10) {
    base = ok("A") && ok(cond_label);
  }

  bool tier_unique = true;
  if (route.needs_r) tier_unique = tier_unique && ok("r");
  if (route.needs_s) tier_unique = tier_unique && ok("s");
  if (route.needs_t) tier_unique = tier_unique && ok("t");
  bool tier_wc = route.needs_wc ? ok("wc") : true;

  report.certified = base && tier_unique && tier_wc;
  if (route.tier_r_wc) {
    report.certified = base;
    report.moreover_certified = base && ok("r") && ok("wc");
  } else {
    report.moreover_certified = report.certified;
  }

  if (!options.with_conclusion || !base) return report;

  // ---- Conclusion and cross-checks ----
  Conclusion conclusion;
  OracleAgreement agreement;

  bool want_unique_c = (theorem == TheoremId::Th3) && report.certified;
  bool want_unique_poc =
      ((theorem == TheoremId::Th2 || theorem == TheoremId::Th4) && base && tier_unique);
  bool want_unique_cfp =
      (theorem == TheoremId::Th2 && report.certified) ||
      (theorem == TheoremId::Th4 && report.certified) ||
      (theorem == TheoremId::Cor10 && report.certified) ||
      (route.tier_r_wc && report.moreover_certified);

  if (space.is_finite()) {
    const FiniteSpace& fs = space.finite();
    const FiniteMappingPair& fp = pair.finite();
    FiniteProfile mine = coincidence_profile(fp, fs);
    FiniteProfile truth = oracle::brute_force_solutions(fp, fs);
    agreement.available = true;
    bool profiles_match = mine.coincidence_points == truth.coincidence_points &&
                          mine.points_of_coincidence == truth.points_of_coincidence &&
                          mine.common_fixed_points == truth.common_fixed_points;
    if (!profiles_match) {
      agreement.agrees = false;
      agreement.detail = "mappings profile disagrees with brute force";
    }
    for (int u : truth.coincidence_points)
      conclusion.coincidence_points.push_back(fs.labels[u]);
    for (int v : truth.points_of_coincidence)
      conclusion.points_of_coincidence.push_back(fs.labels[v]);
    for (int u : truth.common_fixed_points)
      conclusion.common_fixed_points.push_back(fs.labels[u]);
    conclusion.exists_coincidence = !truth.coincidence_points.empty();
    conclusion.unique_coincidence_point = truth.coincidence_points.size() == 1;
    conclusion.unique_point_of_coincidence = truth.points_of_coincidence.size() == 1;
    conclusion.unique_common_fixed_point = truth.common_fixed_points.size() == 1;

    int w0 = find_starting_point(fs, fp).value_or(0);
    conclusion.trace_start = fs.labels[w0];
    IterationTrace trace = picard_jungck(fs, fp, w0, SolverConfig{});
    bool terminal_ok = trace.outcome == IterationTrace::Outcome::Coincidence &&
                       std::find(truth.coincidence_points.begin(),
                                 truth.coincidence_points.end(),
                                 trace.coincidence_point->index) !=
                           truth.coincidence_points.end();
    if (!terminal_ok) {
      agreement.agrees = false;
      agreement.detail += (agreement.detail.empty() ? "" : "; ");
      agreement.detail += "solver did not terminate inside C(f,g)";
    }
    conclusion.trace = std::move(trace);

    if (!conclusion.exists_coincidence) {
      agreement.agrees = false;
      agreement.detail += (agreement.detail.empty() ? "" : "; ");
      agreement.detail += "certified instance has empty C(f,g)";
    }
    if (want_unique_c && !conclusion.unique_coincidence_point) {
      agreement.agrees = false;
      agreement.detail += "; coincidence point not unique";
    }
    if (want_unique_poc && !conclusion.unique_point_of_coincidence) {
      agreement.agrees = false;
      agreement.detail += "; point of coincidence not unique";
    }
    if (want_unique_cfp && !conclusion.unique_common_fixed_point) {
      agreement.agrees = false;
      agreement.detail += "; common fixed point not unique";
    }
  } else {
    const ComputableSpace& cs = space.computable();
    const CMappingPair& cp = pair.computable();
    ComputableProfile profile = coincidence_profile(cp, cs);
    agreement.available = false;
    agreement.detail = "analytic profile (no finite brute-force oracle)";

    conclusion.coincidence_finite = profile.coincidence_points.is_finite_point_set();
    if (conclusion.coincidence_finite) {
      for (const Rat& p : profile.coincidence_points.finite_points())
        conclusion.coincidence_points.push_back(rat_str(p));
    } else {
      conclusion.region_text = profile.coincidence_points.to_text();
    }
    if (profile.points_of_coincidence.is_finite_point_set()) {
      for (const Rat& p : profile.points_of_coincidence.finite_points())
        conclusion.points_of_coincidence.push_back(rat_str(p));
    }
    if (profile.common_fixed_points.is_finite_point_set()) {
      for (const Rat& p : profile.common_fixed_points.finite_points())
        conclusion.common_fixed_points.push_back(rat_str(p));
    }
    conclusion.exists_coincidence = !profile.coincidence_points.empty();
    conclusion.unique_coincidence_point =
        conclusion.coincidence_finite && conclusion.coincidence_points.size() == 1;
    conclusion.unique_point_of_coincidence =
        profile.points_of_coincidence.is_finite_point_set() &&
        conclusion.points_of_coincidence.size() == 1;
    conclusion.unique_common_fixed_point =
        profile.common_fixed_points.is_finite_point_set() &&
        conclusion.common_fixed_points.size() == 1;

    if (auto w0 = find_starting_point(cs, cp, options.probe_budget)) {
      conclusion.trace_start = point_name(space, *w0);
      IterationTrace trace = picard_jungck(cs, cp, *w0, SolverConfig{});
      bool terminal_ok = trace.outcome == IterationTrace::Outcome::Coincidence;
      if (terminal_ok && trace.coincidence_point->kind == Point::Kind::Value) {
        terminal_ok = profile.coincidence_points.contains(trace.coincidence_point->value);
      } else if (terminal_ok &&
                 trace.coincidence_point->kind == Point::Kind::IrrationalSpan) {
        terminal_ok =
            IrrSet::interval(trace.coincidence_point->span_lo,
                             trace.coincidence_point->span_hi)
                .subset_of(profile.coincidence_points.irrationals());
      }
      if (!terminal_ok) {
        agreement.agrees = false;
        agreement.detail += "; solver did not terminate inside C(f,g)";
      }
      conclusion.trace = std::move(trace);
    }

    if (!conclusion.exists_coincidence) {
      agreement.agrees = false;
      agreement.detail += "; certified instance has empty C(f,g)";
    }
    if (want_unique_c && !conclusion.unique_coincidence_point) {
      agreement.agrees = false;
      agreement.detail += "; coincidence point not unique";
    }
    if (want_unique_poc && !conclusion.unique_point_of_coincidence) {
      agreement.agrees = false;
      agreement.detail += "; point of coincidence not unique";
    }
    if (want_unique_cfp && !conclusion.unique_common_fixed_point) {
      agreement.agrees = false;
      agreement.detail += "; common fixed point not unique";
    }
  }

  report.conclusion = std::move(conclusion);
  report.oracle_agreement = std::move(agreement);
  return report;
}

}  // namespace relfix
