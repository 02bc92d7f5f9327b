#include "relfix/region.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace relfix {

bool operator<(const Pos& a, const Pos& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.eps < b.eps;
}
bool operator==(const Pos& a, const Pos& b) { return a.x == b.x && a.eps == b.eps; }
bool operator<=(const Pos& a, const Pos& b) { return a < b || a == b; }

namespace {

// Canonical span endpoints: a lower bound of (x,-1) admits the same rationals
// as (x,0); an upper bound of (x,+1) the same as (x,0).
Pos canon_lo(Pos p) {
  if (p.eps == -1) p.eps = 0;
  return p;
}
Pos canon_hi(Pos p) {
  if (p.eps == +1) p.eps = 0;
  return p;
}

bool span_nonempty(const Pos& lo, const Pos& hi) {
  if (lo.x < hi.x) return true;
  if (lo.x > hi.x) return false;
  return lo.eps <= 0 && hi.eps >= 0;
}

// Spans touch (their union is a single span) iff next.lo <= step-up of cur.hi.
bool mergeable(const RatSet::Span& cur, const RatSet::Span& next) {
  if (next.lo <= cur.hi) return true;
  if (cur.hi.x != next.lo.x) return false;
  // (x,-1) then (x,0): the point x bridges; (x,0) then (x,+1): tail bridges.
  return (cur.hi.eps == -1 && next.lo.eps == 0) || (cur.hi.eps == 0 && next.lo.eps == 1);
}

// Largest upper endpoint admitting only rationals strictly below cut.
Pos upper_before(const Pos& cut) {
  if (cut.eps == 1) return Pos{cut.x, 0};
  return Pos{cut.x, -1};
}
// Smallest lower endpoint admitting only rationals strictly above cut.
Pos lower_after(const Pos& cut) {
  if (cut.eps == -1) return Pos{cut.x, 0};
  return Pos{cut.x, 1};
}

}  // namespace

RatSet RatSet::from_spans(std::vector<Span> spans) {
  std::vector<Span> kept;
  for (auto& s : spans) {
    Span c{canon_lo(s.lo), canon_hi(s.hi)};
    if (span_nonempty(c.lo, c.hi)) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Span& a, const Span& b) { return a.lo < b.lo; });
  RatSet out;
  for (auto& s : kept) {
    if (!out.spans_.empty() && mergeable(out.spans_.back(), s)) {
      if (out.spans_.back().hi < s.hi) out.spans_.back().hi = s.hi;
    } else {
      out.spans_.push_back(s);
    }
  }
  return out;
}

RatSet RatSet::point(const Rat& p) {
  return from_spans({Span{Pos{p, 0}, Pos{p, 0}}});
}

RatSet RatSet::interval(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  Pos plo{lo, lo_closed ? 0 : 1};
  Pos phi{hi, hi_closed ? 0 : -1};
  return from_spans({Span{plo, phi}});
}

bool RatSet::contains(const Rat& q) const {
  Pos p{q, 0};
  for (const auto& s : spans_) {
    if (p < s.lo) return false;
    if (p <= s.hi) return true;
  }
  return false;
}

RatSet RatSet::unite(const RatSet& other) const {
  std::vector<Span> all = spans_;
  all.insert(all.end(), other.spans_.begin(), other.spans_.end());
  return from_spans(std::move(all));
}

RatSet RatSet::intersect(const RatSet& other) const {
  std::vector<Span> out;
  for (const auto& a : spans_) {
    for (const auto& b : other.spans_) {
      Pos lo = std::max(a.lo, b.lo, [](const Pos& x, const Pos& y) { return x < y; });
      Pos hi = std::min(a.hi, b.hi, [](const Pos& x, const Pos& y) { return x < y; });
      if (span_nonempty(lo, hi)) out.push_back(Span{lo, hi});
    }
  }
  return from_spans(std::move(out));
}

RatSet RatSet::subtract(const RatSet& other) const {
  std::vector<Span> out;
  for (const auto& a : spans_) {
    Pos cursor = a.lo;
    bool open_piece = true;
    for (const auto& b : other.spans_) {
      if (b.hi < cursor) continue;
      if (a.hi < b.lo) break;
      // Emit the part of [cursor, a.hi] strictly below b.
      Pos cut = upper_before(b.lo);
      if (span_nonempty(cursor, cut) && cut <= a.hi) out.push_back(Span{cursor, cut});
      cursor = lower_after(b.hi);
      if (!(cursor <= a.hi)) {
        open_piece = false;
        break;
      }
    }
    if (open_piece && span_nonempty(cursor, a.hi)) out.push_back(Span{cursor, a.hi});
  }
  return from_spans(std::move(out));
}

bool RatSet::subset_of(const RatSet& other) const { return subtract(other).empty(); }

bool RatSet::operator==(const RatSet& other) const {
  if (spans_.size() != other.spans_.size()) return false;
  for (std::size_t i = 0; i < spans_.size(); ++i) {
    if (!(spans_[i].lo == other.spans_[i].lo) || !(spans_[i].hi == other.spans_[i].hi))
      return false;
  }
  return true;
}

std::vector<Rat> RatSet::isolated_points() const {
  std::vector<Rat> out;
  for (const auto& s : spans_) {
    if (s.lo == s.hi) out.push_back(s.lo.x);
  }
  return out;
}

bool RatSet::all_isolated() const {
  for (const auto& s : spans_) {
    if (!(s.lo == s.hi)) return false;
  }
  return true;
}

std::optional<Rat> RatSet::simplest_member() const {
  std::optional<Rat> best;
  for (const auto& s : spans_) {
    Rat candidate = simplest_in(s.lo.x, s.lo.eps == 0, s.hi.x, s.hi.eps == 0);
    if (!best || simpler_than(candidate, *best)) best = candidate;
  }
  return best;
}

std::vector<Rat> RatSet::sample(std::size_t max_count) const {
  std::vector<Rat> out;
  if (spans_.empty() || max_count == 0) return out;
  constexpr unsigned long kMaxDen = 64;
  for (unsigned long den = 1; den <= kMaxDen && out.size() < max_count; ++den) {
    std::vector<Rat> layer;
    for (const auto& s : spans_) {
      // p/den in span: p from ceil(lo*den) to floor(hi*den), trimmed by eps.
      Rat lo_scaled = s.lo.x * Rat(den);
      Rat hi_scaled = s.hi.x * Rat(den);
      mpz_class p_lo, p_hi;
      mpz_cdiv_q(p_lo.get_mpz_t(), lo_scaled.get_num().get_mpz_t(),
                 lo_scaled.get_den().get_mpz_t());
      mpz_fdiv_q(p_hi.get_mpz_t(), hi_scaled.get_num().get_mpz_t(),
                 hi_scaled.get_den().get_mpz_t());
      if (Rat(p_lo) == lo_scaled && s.lo.eps == 1) p_lo += 1;
      if (Rat(p_hi) == hi_scaled && s.hi.eps == -1) p_hi -= 1;
      for (mpz_class p = p_lo; p <= p_hi; ++p) {
        mpz_class g;
        mpz_class pd(den);
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), pd.get_mpz_t());
        if (g != 1 && !(p == 0 && den == 1)) continue;  // canonical forms only
        Rat r(p, pd);
        r.canonicalize();
        layer.push_back(r);
      }
    }
    std::sort(layer.begin(), layer.end(),
              [](const Rat& a, const Rat& b) { return simpler_than(a, b); });
    for (auto& r : layer) {
      if (out.size() >= max_count) break;
      out.push_back(r);
    }
  }
  return out;
}

IrrSet IrrSet::from_spans(std::vector<Span> spans) {
  std::vector<Span> kept;
  for (auto& s : spans) {
    if (s.lo < s.hi) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Span& a, const Span& b) { return a.lo < b.lo; });
  IrrSet out;
  for (auto& s : kept) {
    if (!out.spans_.empty() && s.lo <= out.spans_.back().hi) {
      if (out.spans_.back().hi < s.hi) out.spans_.back().hi = s.hi;
    } else {
      out.spans_.push_back(s);
    }
  }
  return out;
}

IrrSet IrrSet::interval(const Rat& lo, const Rat& hi) {
  return from_spans({Span{lo, hi}});
}

IrrSet IrrSet::unite(const IrrSet& other) const {
  std::vector<Span> all = spans_;
  all.insert(all.end(), other.spans_.begin(), other.spans_.end());
  return from_spans(std::move(all));
}

IrrSet IrrSet::intersect(const IrrSet& other) const {
  std::vector<Span> out;
  for (const auto& a : spans_) {
    for (const auto& b : other.spans_) {
      Rat lo = std::max(a.lo, b.lo);
      Rat hi = std::min(a.hi, b.hi);
      if (lo < hi) out.push_back(Span{lo, hi});
    }
  }
  return from_spans(std::move(out));
}

IrrSet IrrSet::subtract(const IrrSet& other) const {
  std::vector<Span> out;
  for (const auto& a : spans_) {
    Rat cursor = a.lo;
    bool alive = true;
    for (const auto& b : other.spans_) {
      if (b.hi <= cursor) continue;
      if (a.hi <= b.lo) break;
      if (cursor < b.lo) out.push_back(Span{cursor, b.lo});
      cursor = b.hi;
      if (!(cursor < a.hi)) {
        alive = false;
        break;
      }
    }
    if (alive && cursor < a.hi) out.push_back(Span{cursor, a.hi});
  }
  return from_spans(std::move(out));
}

bool IrrSet::subset_of(const IrrSet& other) const { return subtract(other).empty(); }

bool IrrSet::operator==(const IrrSet& other) const {
  if (spans_.size() != other.spans_.size()) return false;
  for (std::size_t i = 0; i < spans_.size(); ++i) {
    if (spans_[i].lo != other.spans_[i].lo || spans_[i].hi != other.spans_[i].hi)
      return false;
  }
  return true;
}

Region Region::point(const Rat& p) { return Region(RatSet::point(p), IrrSet()); }

Region Region::interval(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  return Region(RatSet::interval(lo, lo_closed, hi, hi_closed), IrrSet::interval(lo, hi));
}

Region Region::interval_rationals(const Rat& lo, bool lo_closed, const Rat& hi,
                                  bool hi_closed) {
  return Region(RatSet::interval(lo, lo_closed, hi, hi_closed), IrrSet());
}

Region Region::interval_irrationals(const Rat& lo, const Rat& hi) {
  return Region(RatSet(), IrrSet::interval(lo, hi));
}

bool Region::subset_of(const Region& other) const {
  return q_.subset_of(other.q_) && irr_.subset_of(other.irr_);
}

bool Region::operator==(const Region& other) const {
  return q_ == other.q_ && irr_ == other.irr_;
}

Region Region::unite(const Region& other) const {
  return Region(q_.unite(other.q_), irr_.unite(other.irr_));
}

Region Region::intersect(const Region& other) const {
  return Region(q_.intersect(other.q_), irr_.intersect(other.irr_));
}

Region Region::subtract(const Region& other) const {
  return Region(q_.subtract(other.q_), irr_.subtract(other.irr_));
}

bool Region::is_finite_point_set() const { return irr_.empty() && q_.all_isolated(); }

std::vector<Rat> Region::finite_points() const { return q_.isolated_points(); }

Region Region::affine_image(const Rat& scale, const Rat& offset) const {
  if (empty()) return Region();
  if (scale == 0) return Region::point(offset);
  std::vector<RatSet::Span> qs;
  for (const auto& s : q_.spans()) {
    Pos a{Rat(scale * s.lo.x + offset), s.lo.eps};
    Pos b{Rat(scale * s.hi.x + offset), s.hi.eps};
    if (scale < 0) {
      std::swap(a, b);
      a.eps = -a.eps;
      b.eps = -b.eps;
    }
    qs.push_back(RatSet::Span{a, b});
  }
  std::vector<IrrSet::Span> is;
  for (const auto& s : irr_.spans()) {
    Rat a = scale * s.lo + offset;
    Rat b = scale * s.hi + offset;
    if (scale < 0) std::swap(a, b);
    is.push_back(IrrSet::Span{a, b});
  }
  return Region(RatSet::from_spans(std::move(qs)), IrrSet::from_spans(std::move(is)));
}

std::string Region::to_text() const {
  if (empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " u ";
    first = false;
  };
  // Rational-side pieces, annotating spans whose irrational trace is absent.
  for (const auto& s : q_.spans()) {
    sep();
    if (s.lo == s.hi) {
      os << "{" << rat_str(s.lo.x) << "}";
      continue;
    }
    bool irr_too =
        IrrSet::interval(s.lo.x, s.hi.x).subset_of(irr_);
    os << (s.lo.eps == 0 ? "[" : "(") << rat_str(s.lo.x) << "," << rat_str(s.hi.x)
       << (s.hi.eps == 0 ? "]" : ")");
    if (!irr_too) os << " n Q";
  }
  // Irrational-side pieces not already implied by a full interval above.
  for (const auto& s : irr_.spans()) {
    IrrSet covered;
    for (const auto& qs : q_.spans()) {
      if (qs.lo == qs.hi) continue;
      covered = covered.unite(IrrSet::interval(qs.lo.x, qs.hi.x));
    }
    IrrSet leftover = IrrSet::interval(s.lo, s.hi).subtract(covered);
    for (const auto& piece : leftover.spans()) {
      sep();
      os << "irrational(" << rat_str(piece.lo) << "," << rat_str(piece.hi) << ")";
    }
  }
  return os.str();
}

}  // namespace relfix
