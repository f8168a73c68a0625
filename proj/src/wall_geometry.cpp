#include "walls/wall_geometry.hpp"

#include "walls/errors.hpp"

namespace walls {

Rat F_value(const SurfaceGeom& s, const CharVector& v, const Rat& u) {
    if (v.x == 0) throw ZeroRankError("F is defined only for x > 0");
    Rat x(v.x);
    Rat t1 = (s.d / s.g) * (u - v.y2 / x) * (u - v.y2 / x);
    Rat t2 = (s.g * v.y1 * v.y1 - s.d * v.y2 * v.y2 - 2 * x * v.z) / (x * x * s.g);
    return t1 + t2;
}

FQuadratic F_in_u(const SurfaceGeom& s, const CharVector& v) {
    if (v.x == 0) throw ZeroRankError("F is defined only for x > 0");
    Rat x(v.x);
    FQuadratic q;
    q.a = s.d / s.g;
    q.b = -2 * s.d * v.y2 / (s.g * x);
    q.c = (s.d / s.g) * (v.y2 / x) * (v.y2 / x) +
          (s.g * v.y1 * v.y1 - s.d * v.y2 * v.y2 - 2 * x * v.z) / (x * x * s.g);
    return q;
}

Surd c_naught(const SurfaceGeom& s, const CharVector& v, const Rat& u) {
    if (v.x > 0) {
        Rat x(v.x);
        return Surd(v.y1 / x, Rat(-1), F_value(s, v, u));
    }
    if (v.x == 0 && v.y1 > 0) return Surd(Rat((v.z + s.d * u * v.y2) / (s.g * v.y1)));
    throw InvalidCharacterError("C0 requires x > 0, or x = 0 with y1 > 0");
}

WallLocus wall_circle(const SurfaceGeom& s, const CharVector& v, const CharVector& w, const Rat& u) {
    Rat x(v.x), r(w.x);
    const Rat &y1 = v.y1, &y2 = v.y2, &z = v.z;
    const Rat &c1 = w.y1, &c2 = w.y2, &chi = w.z;
    const Rat &g = s.g, &d = s.d;

    Rat slope_gap = x * c1 - r * y1;
    if (slope_gap == 0) {
        // equal mu_omega slopes: the quadratic terms drop and the locus is a
        // line (or everything / nothing)
        Rat B = x * chi - r * z + u * d * (x * c2 - r * y2);
        Rat K = -2 * z * c1 + 2 * c2 * u * d * y1 + x * u * u * d * c1 - 2 * y2 * u * d * c1 +
                2 * chi * y1 - r * u * u * d * y1;
        if (B != 0) return VerticalLine{K / (2 * B)};
        if (K == 0) return CoincidentLocus{};
        return EmptyLocus{Rat(0), Rat(0)};  // slope difference is a non-zero constant
    }

    Rat denom = g * slope_gap;
    Rat C = (x * chi - r * z + u * d * (x * c2 - r * y2)) / denom;
    Rat D = (2 * z * c1 - 2 * c2 * u * d * y1 - x * u * u * d * c1 + 2 * y2 * u * d * c1 -
             2 * chi * y1 + r * u * u * d * y1) /
            denom;
    Rat Rsq = D + C * C;

    if (x != 0) {
        // radius-centre identity: D + C^2 = (C - y1/x)^2 - F
        Rat check = (C - y1 / x) * (C - y1 / x) - F_value(s, v, u);
        if (check != Rsq) throw Error("internal: radius-centre identity violated");
    }

    if (Rsq > 0) return SemiCircle{C, Rsq};
    return EmptyLocus{C, Rsq};
}

Rat radius_sq_from_center(const SurfaceGeom& s, const CharVector& v, const Rat& C, const Rat& u) {
    if (v.x == 0) throw ZeroRankError("radius_sq_from_center requires x > 0");
    Rat x(v.x);
    return (C - v.y1 / x) * (C - v.y1 / x) - F_value(s, v, u);
}

SemiCircle wall_through_point(const SurfaceGeom& s, const CharVector& v, const Rat& u, const Rat& s0,
                              const Rat& t_sq) {
    if (v.x <= 0) throw ZeroRankError("wall_through_point requires x > 0");
    Rat x(v.x);
    Rat m = v.y1 / x;
    if (!(s0 < m)) throw OutOfRegionError("point must have s < y1/x");
    if (!(t_sq > 0)) throw OutOfRegionError("point must have t^2 > 0");
    Rat F = F_value(s, v, u);
    // (s0 - C)^2 + t^2 = (C - m)^2 - F, linear in C
    Rat C = (s0 * s0 + t_sq - m * m + F) / (2 * s0 - 2 * m);
    Rat Rsq = (C - m) * (C - m) - F;
    return SemiCircle{C, Rsq};
}

std::pair<Surd, Surd> c1_window(const SurfaceGeom& s, const CharVector& v, const Int& r, const Rat& u) {
    if (r < 0) throw InvalidCharacterError("c1_window requires r >= 0");
    Surd c0 = c_naught(s, v, u);
    Surd lo = Rat(r) * c0;
    Surd hi = (Rat(r) - Rat(v.x)) * c0 + v.y1;
    return {lo, hi};
}

}  // namespace walls
