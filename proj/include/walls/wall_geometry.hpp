#pragma once

#include "walls/surd.hpp"
#include "walls/surface.hpp"

#include <utility>
#include <variant>

namespace walls {

// Wall locus of a pair (v, w) inside a fixed slice of the stability space.
struct SemiCircle {
    Rat C;    // centre on the t = 0 axis
    Rat Rsq;  // squared radius, > 0
};

struct VerticalLine {
    Rat s;
};

// Degenerate circle (Rsq <= 0), kept with its data for diagnostics.
struct EmptyLocus {
    Rat C;
    Rat Rsq;
};

// mu_Z(w) = mu_Z(v) identically on the slice.
struct CoincidentLocus {};

using WallLocus = std::variant<SemiCircle, VerticalLine, EmptyLocus, CoincidentLocus>;

// F = (d/g)(u - y2/x)^2 + (1/(x^2 g))(y1^2 g - y2^2 d - 2 x z).
// Non-negative for every Bogomolov class with x > 0. Throws ZeroRankError.
Rat F_value(const SurfaceGeom& s, const CharVector& v, const Rat& u);

// F(u) = a u^2 + b u + c; the entire u-dependence of the bounds is here.
struct FQuadratic {
    Rat a, b, c;
    Rat eval(const Rat& u) const { return a * u * u + b * u + c; }
};
FQuadratic F_in_u(const SurfaceGeom& s, const CharVector& v);

// The abscissa every wall must cross:
//   x > 0:            y1/x - sqrt(F)
//   x = 0, y1 > 0:    (z + d u y2)/(g y1)
Surd c_naught(const SurfaceGeom& s, const CharVector& v, const Rat& u);

// Exact wall locus for the pair (v, w) at slice parameter u.
WallLocus wall_circle(const SurfaceGeom& s, const CharVector& v, const CharVector& w, const Rat& u);

// (C - y1/x)^2 - F; may be <= 0 (no real circle at that centre).
Rat radius_sq_from_center(const SurfaceGeom& s, const CharVector& v, const Rat& C, const Rat& u);

// The unique real pseudo-wall through (s0, t) with t^2 = t_sq > 0, s0 < y1/x.
SemiCircle wall_through_point(const SurfaceGeom& s, const CharVector& v, const Rat& u, const Rat& s0,
                              const Rat& t_sq);

// Open interval (r*C0, y1 + (r-x)*C0) of admissible omega-coefficients of
// c1(w) for a destabilizer of rank r.
std::pair<Surd, Surd> c1_window(const SurfaceGeom& s, const CharVector& v, const Int& r, const Rat& u);

}  // namespace walls
