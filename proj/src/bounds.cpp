#include "walls/bounds.hpp"

#include "walls/errors.hpp"

namespace walls {

Rat simplest_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw Error("simplest_between requires lo < hi");
    Int n = rat_floor(lo);
    Rat lo2 = lo - Rat(n), hi2 = hi - Rat(n);  // 0 <= lo2 < 1
    if (hi2 > 1) return Rat(n + 1);
    if (lo2 == 0) {
        // (0, hi2): the minimal denominator is the least q with 1/q < hi2
        Int q = rat_floor(1 / hi2) + 1;
        return Rat(n) + Rat(1, q);
    }
    if (hi2 == 1) {
        // (lo2, 1): mirror of the previous case through x -> 1 - x
        Int q = rat_floor(1 / (1 - lo2)) + 1;
        return Rat(n) + Rat(q - 1, q);
    }
    // 0 < lo2 < hi2 < 1: descend the Stern-Brocot tree via reciprocals
    Rat y = simplest_between(1 / hi2, 1 / lo2);
    return Rat(n) + 1 / y;
}

Rat delta_bar(const SurfaceGeom& s, const CharVector& v) {
    return s.g * v.y1 * v.y1 - s.d * v.y2 * v.y2 - v.alpha_sq;
}

XiResult xi_value(const SurfaceGeom& s, const CharVector& v) {
    if (v.x <= 0) throw ZeroRankError("xi_value requires x > 0");
    Rat Y = v.y1 * s.gprime;
    if (!is_integer(Y)) throw InvalidCharacterError("y1*g' must be an integer");
    Int p = boost::multiprecision::gcd(v.x, boost::multiprecision::abs(num(Y)));
    if (p == 0) p = v.x;
    XiResult out;
    out.p = p;
    out.xi = (p == 1) ? Rat(1) : Rat(2 * s.gtilde * Rat(p)) / (2 * s.gtilde * Rat(p) - 1);
    return out;
}

MN mn_search(const SurfaceGeom& s, const CharVector& v, const Rat& xi) {
    if (v.x <= 0) throw ZeroRankError("mn_search requires x > 0");
    Rat Yq = v.y1 * s.gprime;
    if (!is_integer(Yq)) throw InvalidCharacterError("y1*g' must be an integer");
    Int Y = num(Yq);
    Int x = v.x;
    Int p = boost::multiprecision::gcd(x, boost::multiprecision::abs(Y));
    if (p == 0) p = x;
    Rat db = delta_bar(s, v);
    Rat kcap = xi * Rat(x);
    Rat target(Y, x);  // y'/x'
    for (Int n = 1;; ++n) {
        Int t = n * Y - p;
        if (t % x != 0) continue;
        Int m = t / x;
        // n-condition n > (p/g') sqrt(g/delta_bar); vacuous when delta_bar <= 0
        if (db > 0 && !(Rat(n * n) * s.gprime * s.gprime * db > Rat(p * p) * s.g)) continue;
        Rat simp = simplest_between(Rat(m, n), target);
        if (Rat(den(simp)) > kcap) return {m, n};
    }
}

namespace {

// All four envelope numbers follow from the excluded strip of width delta
// against s = y1/x:  C + R <= y1/x - delta.
void fill_bounds(const Rat& y1_over_x, const Rat& F, const Rat& delta, Rat& C_lower, Rat& R0,
                 Rat& s_min, Rat& s_max) {
    C_lower = y1_over_x - F / (2 * delta) - delta / 2;
    R0 = F / (2 * delta) - delta / 2;
    s_min = y1_over_x - F / delta;
    s_max = y1_over_x - delta;
}

}  // namespace

BoundsReport bounds_report(const SurfaceGeom& s, const CharVector& v, const Rat& u) {
    BoundsReport r;
    if (v.x == 0) {
        if (v.y1 <= 0) throw InvalidCharacterError("x = 0 requires y1 > 0");
        r.rank0_radius_bound = v.y1;
        r.rank0_center = (v.z + s.d * u * v.y2) / (s.g * v.y1);
        r.C0 = Surd(*r.rank0_center);
        return r;
    }
    if (v.x < 0) throw InvalidCharacterError("bounds_report requires x >= 0");

    Rat F = F_value(s, v, u);
    r.F = F;
    r.F_u = F_in_u(s, v);
    r.C0 = c_naught(s, v, u);
    if (F == 0) {
        r.F_zero_no_walls = true;
        return r;
    }
    if (F < 0) throw InvalidCharacterError("F < 0: v is not a Bogomolov class");

    XiResult xi = xi_value(s, v);
    r.p = xi.p;
    r.xi = xi.xi;
    MN mn = mn_search(s, v, xi.xi);
    r.mn = mn;

    Rat x(v.x), m = v.y1 / x;
    Rat nn(mn.n);
    Rat C_lower, R0, s_min, s_max;
    if (xi.p == 1) {
        Rat delta = 1 / (s.gprime * nn * x);
        fill_bounds(m, F, delta, C_lower, R0, s_min, s_max);
        r.formula = "p=1";
    } else {
        Rat delta = 1 / (2 * s.g * nn * x);
        fill_bounds(m, F, delta, C_lower, R0, s_min, s_max);
        r.formula = "p>1";
        {
            BoundsVariant alt;
            alt.label = "p>1 (g'-form)";
            alt.mn = mn;
            Rat dv = 1 / (2 * s.gprime * nn * x);
            fill_bounds(m, F, dv, alt.C_lower, alt.R0, alt.s_min, alt.s_max);
            r.variants.push_back(std::move(alt));
        }
        {
            BoundsVariant alt;
            alt.label = "p=1-style (xi=1)";
            alt.mn = mn_search(s, v, Rat(1));
            Rat dv = 1 / (s.gprime * Rat(alt.mn.n) * x);
            fill_bounds(m, F, dv, alt.C_lower, alt.R0, alt.s_min, alt.s_max);
            r.variants.push_back(std::move(alt));
        }
    }
    r.C_lower = C_lower;
    r.R0 = R0;
    r.s_min = s_min;
    r.s_max = s_max;
    return r;
}

FinitenessProbe finiteness_probe(const SurfaceGeom& s, const CharVector& v, const Rat& u) {
    if (v.x == 0) throw ZeroRankError("finiteness_probe requires x > 0");
    Rat F = F_value(s, v, u);
    FinitenessProbe out;
    Rat root;
    if (perfect_square(F, &root)) {
        out.critical_ray = v.y1 / Rat(v.x) - root;
        out.globally_finite_hint = true;
    }
    return out;
}

}  // namespace walls
