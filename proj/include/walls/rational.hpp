#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

namespace walls {

// Exact arbitrary-precision arithmetic. All core computations stay in Rat;
// floating point appears only at the SVG rendering boundary.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int num(const Rat& q);
Int den(const Rat& q);

int sign(const Int& n);
int sign(const Rat& q);

bool is_integer(const Rat& q);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// floor(sqrt(n)) for n >= 0
Int isqrt(const Int& n);

// True iff q is the square of a rational; on success *root is the
// non-negative square root.
bool perfect_square(const Rat& q, Rat* root = nullptr);

// Rational enclosure of sqrt(q) for q >= 0, accurate to 10^-digits.
std::pair<Rat, Rat> sqrt_brackets(const Rat& q, unsigned digits);

// "p/q", or "p" when the denominator is 1. Throws ParseError on bad input.
Rat parse_rat(std::string_view s);
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

// Deterministic plain-decimal rendering at `sig` significant digits
// (round half away from zero, no exponent notation).
std::string decimal(const Rat& q, unsigned sig = 12);

// decimal(sqrt(q)); exact when q is a perfect square.
std::string sqrt_decimal(const Rat& q, unsigned sig = 12);

}  // namespace walls
