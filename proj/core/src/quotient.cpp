#include "relfix/quotient.hpp"

#include <algorithm>

namespace relfix {

std::vector<Rat> Quotient::f_values() const {
  std::vector<Rat> out;
  for (const auto& c : cells) out.push_back(c.f_value);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rat> Quotient::g_values() const {
  std::vector<Rat> out;
  for (const auto& c : cells) out.push_back(c.g_value);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Quotient> build_quotient(const ComputableSpace& space,
                                       const CMappingPair& pair) {
  (void)space;  // cells come from the maps' effective pieces
  Quotient q;
  for (const auto& fp : pair.f.pieces()) {
    for (const auto& gp : pair.g.pieces()) {
      Region common = fp.cell.intersect(gp.cell);
      if (common.empty()) continue;

      bool finite_points = common.is_finite_point_set();
      if ((!fp.rule.is_constant() || !gp.rule.is_constant()) && !finite_points) {
        return std::nullopt;
      }

      if (finite_points) {
        for (const Rat& p : common.finite_points()) {
          QuotientCell cell;
          cell.kind = QuotientCell::Kind::PointCell;
          cell.name = rat_str(p);
          cell.lo = cell.hi = p;
          cell.representative = p;
          cell.f_value = fp.rule.apply(p);
          cell.g_value = gp.rule.apply(p);
          q.cells.push_back(std::move(cell));
        }
        continue;
      }

      // Constant rules over an extended region: emit one cell per span.
      for (const auto& span : common.rationals().spans()) {
        QuotientCell cell;
        cell.f_value = fp.rule.offset;
        cell.g_value = gp.rule.offset;
        if (span.lo == span.hi) {
          cell.kind = QuotientCell::Kind::PointCell;
          cell.name = rat_str(span.lo.x);
          cell.lo = cell.hi = span.lo.x;
          cell.representative = span.lo.x;
        } else {
          cell.kind = QuotientCell::Kind::RationalCell;
          cell.lo = span.lo.x;
          cell.hi = span.hi.x;
          cell.name = "rational(" + rat_str(cell.lo) + "," + rat_str(cell.hi) + ")";
          cell.representative =
              simplest_in(span.lo.x, span.lo.eps == 0, span.hi.x, span.hi.eps == 0);
        }
        q.cells.push_back(std::move(cell));
      }
      for (const auto& span : common.irrationals().spans()) {
        QuotientCell cell;
        cell.kind = QuotientCell::Kind::IrrationalCell;
        cell.lo = span.lo;
        cell.hi = span.hi;
        cell.name = "irrational(" + rat_str(cell.lo) + "," + rat_str(cell.hi) + ")";
        cell.f_value = fp.rule.offset;
        cell.g_value = gp.rule.offset;
        q.cells.push_back(std::move(cell));
      }
    }
  }

  std::sort(q.cells.begin(), q.cells.end(), [](const QuotientCell& a, const QuotientCell& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.hi < b.hi;
  });
  return q;
}

}  // namespace relfix
