#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace relfix {

// All arithmetic in the library is exact; Rat is the only number type that
// crosses module boundaries.
using Rat = mpq_class;

// Parses "p", "-p", "p/q" (q > 0 after sign normalization). Throws
// std::invalid_argument on malformed input or a zero denominator.
Rat rat_parse(const std::string& text);
std::optional<Rat> rat_try_parse(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

Rat rat_abs(const Rat& r);
Rat rat_pow(const Rat& base, unsigned long exponent);

// Simplicity order used wherever a canonical representative is needed:
// smaller denominator first, then smaller |numerator|, then nonnegative
// before negative. Total on canonical rationals.
bool simpler_than(const Rat& a, const Rat& b);

// The simplicity-least rational in the interval described by the bounds
// (each endpoint included iff its *_closed flag is set). The interval must
// contain at least one rational; for lo < hi it always does.
Rat simplest_in(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);

}  // namespace relfix
