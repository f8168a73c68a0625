#pragma once

#include "walls/rational.hpp"

#include <compare>
#include <string>

namespace walls {

// Value a + b*sqrt(c). Normalized form keeps c a non-negative integer with
// cheap square factors extracted; perfect squares fold into the rational
// part, so a pure rational always has b == 0, c == 0. Comparisons never
// extract roots numerically: they use sign-aware squaring and are exact.
struct Surd {
    Rat a;
    Rat b;
    Int c;

    Surd() : a(0), b(0), c(0) {}
    Surd(Rat a_, Rat b_, Rat c_);  // normalizing constructor; c_ >= 0
    /* implicit */ Surd(const Rat& r) : a(r), b(0), c(0) {}

    bool is_rational() const { return b == 0; }
    // Throws Error unless is_rational().
    Rat rational_value() const;

    friend Surd operator+(const Surd& s, const Rat& r) { Surd t = s; t.a += r; return t; }
    friend Surd operator-(const Surd& s, const Rat& r) { Surd t = s; t.a -= r; return t; }
    friend Surd operator*(const Rat& r, const Surd& s) { return Surd(r * s.a, r * s.b, Rat(s.c)); }
    friend Surd operator-(const Surd& s) { return Surd(-s.a, -s.b, Rat(s.c)); }

    bool operator==(const Surd& o) const;
};

// sqrt(q) as a Surd (q >= 0).
Surd surd_sqrt(const Rat& q);

// Sign of the denoted real number: -1, 0, +1.
int sign(const Surd& s);

// Exact three-way comparison of denoted real numbers.
int cmp_surd(const Surd& lhs, const Surd& rhs);

inline bool surd_lt(const Surd& l, const Surd& r) { return cmp_surd(l, r) < 0; }
inline bool surd_le(const Surd& l, const Surd& r) { return cmp_surd(l, r) <= 0; }

Int floor_surd(const Surd& s);
Int ceil_surd(const Surd& s);

// Rational enclosure [lo, hi] with hi - lo <= 2*10^-digits (exact when rational).
std::pair<Rat, Rat> brackets(const Surd& s, unsigned digits);

std::string decimal(const Surd& s, unsigned sig = 12);
std::string to_string(const Surd& s);  // "a+b*sqrt(c)" debug form

}  // namespace walls
