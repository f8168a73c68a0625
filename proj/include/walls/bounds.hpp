#pragma once

#include "walls/surd.hpp"
#include "walls/surface.hpp"
#include "walls/wall_geometry.hpp"

#include <optional>
#include <string>

namespace walls {

// Minimal-denominator fraction strictly inside the open interval (lo, hi).
Rat simplest_between(const Rat& lo, const Rat& hi);

// Delta-bar = g y1^2 - d y2^2 - alpha^2. Distinct from the Bogomolov
// discriminant c1^2 - 2 x z; both are used and must not be conflated.
Rat delta_bar(const SurfaceGeom& s, const CharVector& v);

struct XiResult {
    Int p;   // gcd(x, y1 g')
    Rat xi;  // 1 when p = 1, else 2 gtilde p / (2 gtilde p - 1)
};
XiResult xi_value(const SurfaceGeom& s, const CharVector& v);

struct MN {
    Int m;
    Int n;
    bool operator==(const MN&) const = default;
};

// Least n >= 1 with g' n y1 - m x = p such that the Farey gap
// (m/n, y'/x') contains no reduced fraction of denominator <= xi*x and the
// n-condition n > (p/g') sqrt(g / delta_bar) holds.
MN mn_search(const SurfaceGeom& s, const CharVector& v, const Rat& xi);

// Secondary bound values computed from an alternative (m, n) / formula
// choice, kept alongside the primary ones for comparison.
struct BoundsVariant {
    std::string label;
    MN mn;
    Rat C_lower, R0, s_min, s_max;
};

struct BoundsReport {
    // present for x > 0
    std::optional<Int> p;
    std::optional<Rat> xi;
    std::optional<MN> mn;
    std::optional<Rat> F;
    std::optional<FQuadratic> F_u;
    std::optional<Surd> C0;

    // present for x > 0, F > 0
    std::optional<Rat> C_lower, R0, s_min, s_max;
    std::string formula;  // which printed bound produced C_lower: "p=1" or "p>1"
    std::vector<BoundsVariant> variants;

    // special cases
    bool F_zero_no_walls = false;
    std::optional<Rat> rank0_radius_bound;  // = y1 when x = 0
    std::optional<Rat> rank0_center;        // fixed wall centre when x = 0
};

BoundsReport bounds_report(const SurfaceGeom& s, const CharVector& v, const Rat& u);

struct FinitenessProbe {
    std::optional<Rat> critical_ray;  // y1/x - sqrt(F) when F is a square rational
    bool globally_finite_hint = false;
};
FinitenessProbe finiteness_probe(const SurfaceGeom& s, const CharVector& v, const Rat& u);

}  // namespace walls
