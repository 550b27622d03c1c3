#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace relaxmatch {

// All solver arithmetic is exact. Discomforts and aggregate costs are
// arbitrary-precision rationals; matching weights are arbitrary-precision
// integers (with an int64 fast path inside the matching engine).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-0.25", "2.50", "+1.", ".5" or an explicit fraction "p/q"
// into an exact rational. Throws ParseError on malformed input or q == 0.
Rational parse_rational(const std::string& text);

// Formats exactly. Denominators of the form 2^a * 5^b (after normalisation)
// become finite decimal strings without trailing zeros; anything else falls
// back to "p/q". parse_rational(format_rational(x)) == x for all x.
std::string format_rational(const Rational& value);

// Fixed-point decimal with `digits` fractional places, rounded half away
// from zero using integer arithmetic only, so the text is identical on every
// platform.
std::string format_fixed(const Rational& value, unsigned digits);

// A cost bound. Empty means unbounded ("inf" on the command line and in files).
using Bound = std::optional<Rational>;

// Parses a bound: "inf" (case-insensitive) or a rational literal.
Bound parse_bound(const std::string& text);
std::string format_bound(const Bound& bound);

inline bool within_bound(const Rational& cost, const Bound& bound) {
  return !bound.has_value() || cost <= *bound;
}

}  // namespace relaxmatch
