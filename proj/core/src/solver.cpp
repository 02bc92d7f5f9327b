#include "relfix/solver.hpp"

#include "relfix/quotient.hpp"

#include <stdexcept>

namespace relfix {

std::optional<int> find_starting_point(const FiniteSpace& space,
                                       const FiniteMappingPair& pair) {
  for (int w = 0; w < space.size(); ++w) {
    if (space.relation.member(pair.g[w], pair.f[w])) return w;
  }
  return std::nullopt;
}

std::optional<Point> find_starting_point(const ComputableSpace& space,
                                         const CMappingPair& pair,
                                         std::size_t probe_budget) {
  for (const Rat& w : space.carrier.rationals().sample(probe_budget)) {
    if (space.relation.member(pair.g.eval(w), pair.f.eval(w))) return Point::val(w);
  }
  if (auto quotient = build_quotient(space, pair)) {
    for (const auto& cell : quotient->cells) {
      if (cell.kind != QuotientCell::Kind::IrrationalCell) continue;
      if (space.relation.member(cell.g_value, cell.f_value)) {
        return Point::irr(cell.lo, cell.hi);
      }
    }
  }
  return std::nullopt;
}

IterationTrace picard_jungck(const FiniteSpace& space, const FiniteMappingPair& pair,
                             int w0, const SolverConfig& config) {
  IterationTrace trace;
  int w = w0;
  trace.w.push_back(Point::idx(w));
  trace.gw.push_back(Point::idx(pair.g[w]));
  for (long n = 0;; ++n) {
    int fw = pair.f[w], gw = pair.g[w];
    if (fw == gw) {
      trace.outcome = IterationTrace::Outcome::Coincidence;
      trace.coincidence_point = Point::idx(w);
      return trace;
    }
    if (n >= config.max_iterations) {
      trace.outcome = IterationTrace::Outcome::BudgetExhausted;
      return trace;
    }
    // Step: gw_{n+1} = f(w_n); w_{n+1} is the least-index g-preimage unless
    // a user section names one.
    int next = -1;
    for (const auto& [value, chosen] : config.user_section_finite) {
      if (value == fw && pair.g[chosen] == fw) {
        next = chosen;
        break;
      }
    }
    for (int u = 0; next < 0 && u < space.size(); ++u) {
      if (pair.g[u] == fw) next = u;
    }
    if (next < 0) {
      trace.outcome = IterationTrace::Outcome::NoPreimage;
      trace.fail_step = n;
      return trace;
    }
    trace.step_distances.push_back(space.d(gw, fw));
    w = next;
    trace.w.push_back(Point::idx(w));
    trace.gw.push_back(Point::idx(pair.g[w]));
  }
}

namespace {

struct CImages {
  Rat f, g;
};

CImages c_images(const CMappingPair& pair, const Point& p) {
  if (p.kind == Point::Kind::Value) return {pair.f.eval(p.value), pair.g.eval(p.value)};
  if (p.kind == Point::Kind::IrrationalSpan) {
    auto f = pair.f.eval_irrational(p.span_lo, p.span_hi);
    auto g = pair.g.eval_irrational(p.span_lo, p.span_hi);
    if (!f || !g) {
      throw std::invalid_argument("maps are not constant on the starting class");
    }
    return {*f, *g};
  }
  throw std::invalid_argument("finite index used with a computable carrier");
}

// Preimage choice: user section first, then simplest rational, then a whole
// irrational class when the maps are constant on it.
std::optional<Point> choose_preimage(const CMappingPair& pair, const Rat& value,
                                     const SolverConfig& config) {
  for (const auto& [v, chosen] : config.user_section) {
    if (v == value) return Point::val(chosen);
  }
  Region preimage = pair.g.preimage_value(value);
  if (auto simplest = preimage.rationals().simplest_member()) {
    return Point::val(*simplest);
  }
  for (const auto& span : preimage.irrationals().spans()) {
    if (pair.f.eval_irrational(span.lo, span.hi) &&
        pair.g.eval_irrational(span.lo, span.hi)) {
      return Point::irr(span.lo, span.hi);
    }
  }
  return std::nullopt;
}

}  // namespace

IterationTrace picard_jungck(const ComputableSpace& space, const CMappingPair& pair,
                             const Point& w0, const SolverConfig& config) {
  IterationTrace trace;
  Point w = w0;
  CImages img = c_images(pair, w);
  trace.w.push_back(w);
  trace.gw.push_back(Point::val(img.g));
  for (long n = 0;; ++n) {
    Rat gap = space.d(img.f, img.g);
    if (gap <= config.epsilon) {
      trace.outcome = IterationTrace::Outcome::Coincidence;
      trace.coincidence_point = w;
      return trace;
    }
    if (n >= config.max_iterations) {
      trace.outcome = IterationTrace::Outcome::BudgetExhausted;
      return trace;
    }
    std::optional<Point> next = choose_preimage(pair, img.f, config);
    if (!next) {
      trace.outcome = IterationTrace::Outcome::NoPreimage;
      trace.fail_step = n;
      return trace;
    }
    trace.step_distances.push_back(gap);
    w = *next;
    img = c_images(pair, w);
    trace.w.push_back(w);
    trace.gw.push_back(Point::val(img.g));
  }
}

Rat error_bound(const ComparisonFunction& phi, const Rat& d0, unsigned long n) {
  if (d0 < 0) throw std::invalid_argument("negative initial distance");
  std::vector<Rat> grid{Rat(1, 2), Rat(1), Rat(2)};
  if (d0 > 0) grid.push_back(d0);
  PhiValidation validation = validate_phi(phi, grid, 32, Rat(0));
  if (!validation.valid) {
    throw std::invalid_argument("comparison function failed validation");
  }
  if (d0 == 0) return Rat(0);
  if (phi.kind == PhiKind::Linear) {
    // sum_{k>=n} k^j d0 = k^n d0 / (1-k)
    return Rat(rat_pow(phi.k, n) * d0 / (Rat(1) - phi.k));
  }
  // Partial sum to the declared tail start past n, then the geometric tail.
  unsigned long tail_start =
      std::max(n, static_cast<unsigned long>(std::max(phi.tail_from, 0)));
  Rat sum(0);
  Rat term = phi.iterate(d0, n);
  for (unsigned long j = n; j < tail_start; ++j) {
    sum += term;
    term = phi.apply(term);
  }
  // term == phi^{tail_start}(d0); dominated tail sums to term / (1 - ratio).
  sum += Rat(term / (Rat(1) - phi.tail_ratio));
  return sum;
}

PromoteResult promote_to_common_fixed(const FiniteMappingPair& pair,
                                      const FiniteSpace& space, int x) {
  PromoteResult out;
  if (pair.f[x] != pair.g[x]) {
    throw std::invalid_argument("promote_to_common_fixed needs a coincidence point");
  }
  int fgx = pair.f[pair.g[x]], gfx = pair.g[pair.f[x]];
  if (fgx != gfx) {
    out.failure = "pair is not weakly compatible at " + space.labels[x] + ": f(gx)=" +
                  space.labels[fgx] + " differs from g(fx)=" + space.labels[gfx];
    return out;
  }
  int y = pair.g[x];
  if (pair.f[y] != pair.g[y]) {
    out.failure = "f(y) != g(y) at y = " + space.labels[y];
    return out;
  }
  if (pair.g[y] != y) {
    out.failure = "g(y) != y at y = " + space.labels[y] +
                  " (uniqueness hypotheses do not certify)";
    return out;
  }
  out.ok = true;
  out.common_fixed_point = Point::idx(y);
  return out;
}

PromoteResult promote_to_common_fixed(const CMappingPair& pair,
                                      const ComputableSpace& space, const Rat& x) {
  (void)space;
  PromoteResult out;
  if (pair.f.eval(x) != pair.g.eval(x)) {
    throw std::invalid_argument("promote_to_common_fixed needs a coincidence point");
  }
  Rat fgx = pair.f.eval(pair.g.eval(x)), gfx = pair.g.eval(pair.f.eval(x));
  if (fgx != gfx) {
    out.failure = "pair is not weakly compatible at " + rat_str(x) + ": f(gx)=" +
                  rat_str(fgx) + " differs from g(fx)=" + rat_str(gfx);
    return out;
  }
  Rat y = pair.g.eval(x);
  if (pair.f.eval(y) != pair.g.eval(y)) {
    out.failure = "f(y) != g(y) at y = " + rat_str(y);
    return out;
  }
  if (pair.g.eval(y) != y) {
    out.failure = "g(y) != y at y = " + rat_str(y) +
                  " (uniqueness hypotheses do not certify)";
    return out;
  }
  out.ok = true;
  out.common_fixed_point = Point::val(y);
  return out;
}

}  // namespace relfix
