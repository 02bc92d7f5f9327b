#include "relfix/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace relfix {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  auto parsed = rat_try_parse(text);
  if (!parsed) throw std::invalid_argument("not a rational: '" + text + "'");
  return *parsed;
}

std::optional<Rat> rat_try_parse(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) return std::nullopt;
  std::string s = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  std::string num = s, den = "1";
  if (std::size_t slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat rat_pow(const Rat& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool simpler_than(const Rat& a, const Rat& b) {
  int dc = cmp(a.get_den(), b.get_den());
  if (dc != 0) return dc < 0;
  mpz_class an = abs(a.get_num()), bn = abs(b.get_num());
  int nc = cmp(an, bn);
  if (nc != 0) return nc < 0;
  return a.get_num() >= 0 && b.get_num() < 0;
}

namespace {

// Simplest rational in a positive interval; hi unset means unbounded above.
// Requires lo > 0 or (lo == 0 with lo_closed false ... callers guarantee the
// interval lies in (0, inf)).
Rat simplest_positive(const Rat& lo, bool lo_closed, const std::optional<Rat>& hi,
                      bool hi_closed) {
  // Smallest admissible integer, if the interval contains one.
  mpz_class n0;
  mpz_cdiv_q(n0.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  Rat n0r(n0);
  if (n0r == lo && !lo_closed) n0r += 1;
  if (!hi || n0r < *hi || (n0r == *hi && hi_closed)) return n0r;

  // No integer inside: descend into the common unit interval (n, n+1).
  mpz_class nfloor;
  mpz_fdiv_q(nfloor.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  Rat n(nfloor);
  // x = n + 1/y maps the interval to a reciprocal one with swapped bounds.
  Rat sub_lo = Rat(1) / (*hi - n);
  std::optional<Rat> sub_hi;
  if (lo != n) sub_hi = Rat(1) / (lo - n);
  Rat y = simplest_positive(sub_lo, hi_closed, sub_hi, lo_closed);
  Rat result = n + Rat(1) / y;
  return result;
}

}  // namespace

Rat simplest_in(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
    throw std::invalid_argument("simplest_in: empty interval");
  if (lo == hi) return lo;

  bool zero_in = (lo < 0 || (lo == 0 && lo_closed)) && (hi > 0 || (hi == 0 && hi_closed));
  if (zero_in) return Rat(0);
  if (hi < 0 || (hi == 0 && !hi_closed)) {
    Rat mirrored = simplest_in(-hi, hi_closed, -lo, lo_closed);
    return Rat(-mirrored);
  }
  return simplest_positive(lo, lo_closed, std::optional<Rat>(hi), hi_closed);
}

}  // namespace relfix
