#pragma once

#include "relfix/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace relfix {

// Boundary position on the rational line with an infinitesimal offset:
// eps = -1 sits just below x, 0 at x, +1 just above. A span [lo, hi] denotes
// the rationals q with lo <= (q, 0) <= hi, which lets half-open and open
// interval arithmetic run on closed spans.
struct Pos {
  Rat x;
  int eps = 0;
};

bool operator<(const Pos& a, const Pos& b);
bool operator==(const Pos& a, const Pos& b);
bool operator<=(const Pos& a, const Pos& b);

// A set of rational numbers: disjoint, maximal, sorted spans. Canonical form
// keeps lo.eps in {0, +1} and hi.eps in {-1, 0}; a single rational p is the
// degenerate span [(p,0), (p,0)].
class RatSet {
 public:
  struct Span {
    Pos lo, hi;
  };

  RatSet() = default;
  static RatSet point(const Rat& p);
  static RatSet interval(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);

  bool empty() const { return spans_.empty(); }
  bool contains(const Rat& q) const;
  bool subset_of(const RatSet& other) const;
  bool operator==(const RatSet& other) const;

  RatSet unite(const RatSet& other) const;
  RatSet intersect(const RatSet& other) const;
  RatSet subtract(const RatSet& other) const;

  const std::vector<Span>& spans() const { return spans_; }
  // Spans of zero width, i.e. isolated rationals.
  std::vector<Rat> isolated_points() const;
  bool all_isolated() const;

  std::optional<Rat> simplest_member() const;
  // Members in global simplicity order, at most max_count of them.
  std::vector<Rat> sample(std::size_t max_count) const;

  static RatSet from_spans(std::vector<Span> spans);  // normalizes

 private:
  std::vector<Span> spans_;
};

// A set of irrational numbers, always a finite union of interval traces.
// Because every endpoint in the system is rational, each piece is stored as
// a closed rational span [lo, hi] with lo < hi; touching spans merge.
class IrrSet {
 public:
  struct Span {
    Rat lo, hi;
  };

  IrrSet() = default;
  static IrrSet interval(const Rat& lo, const Rat& hi);

  bool empty() const { return spans_.empty(); }
  bool subset_of(const IrrSet& other) const;
  bool operator==(const IrrSet& other) const;

  IrrSet unite(const IrrSet& other) const;
  IrrSet intersect(const IrrSet& other) const;
  IrrSet subtract(const IrrSet& other) const;

  const std::vector<Span>& spans() const { return spans_; }

  static IrrSet from_spans(std::vector<Span> spans);  // normalizes

 private:
  std::vector<Span> spans_;
};

// A subset of the real line closed under the operations the instance
// catalogue needs: finite unions of intervals, interval-with-rationality
// restrictions, and isolated rational points.
class Region {
 public:
  Region() = default;
  Region(RatSet q, IrrSet irr) : q_(std::move(q)), irr_(std::move(irr)) {}

  static Region point(const Rat& p);
  static Region interval(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);
  static Region interval_rationals(const Rat& lo, bool lo_closed, const Rat& hi,
                                   bool hi_closed);
  static Region interval_irrationals(const Rat& lo, const Rat& hi);

  const RatSet& rationals() const { return q_; }
  const IrrSet& irrationals() const { return irr_; }

  bool empty() const { return q_.empty() && irr_.empty(); }
  bool contains(const Rat& q) const { return q_.contains(q); }
  bool subset_of(const Region& other) const;
  bool operator==(const Region& other) const;

  Region unite(const Region& other) const;
  Region intersect(const Region& other) const;
  Region subtract(const Region& other) const;

  // True iff the region is a finite set of rational points.
  bool is_finite_point_set() const;
  std::vector<Rat> finite_points() const;

  // Image under x -> scale*x + offset. scale == 0 collapses to a point.
  Region affine_image(const Rat& scale, const Rat& offset) const;

  std::string to_text() const;

 private:
  RatSet q_;
  IrrSet irr_;
};

}  // namespace relfix
