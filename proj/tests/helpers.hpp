#pragma once

#include "walls/enumerate.hpp"
#include "walls/errors.hpp"
#include "walls/json_io.hpp"

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

// Shared fixtures and randomized property suites. The suites are plain
// functions returning pass/fail tallies so that both the unit tests and the
// acceptance binary can run them.
namespace testutil {

using namespace walls;

// Principally polarized abelian surface lattice: NS = Z<omega>, omega^2 = 2,
// divisibility constant 2 (so the y1 grid is Z).
inline SurfaceGeom make_ppas() {
    return SurfaceGeom::make(1, {{Int(2)}}, {Rat(1)}, {}, Rat(2));
}

// Product of two elliptic curves: hyperbolic plane lattice, omega = l1 + l2,
// gamma = l1 - l2, divisibility 1 (y1 grid is (1/2)Z).
inline SurfaceGeom make_product() {
    return SurfaceGeom::make(2, {{Int(0), Int(1)}, {Int(1), Int(0)}}, {Rat(1), Rat(1)},
                             {Rat(1), Rat(-1)}, Rat(1));
}

inline CharVector ppas_char(const SurfaceGeom& S, long x, long c1, long ch2) {
    return char_from_lattice(S, Int(x), {Rat(c1)}, Rat(ch2));
}

inline CharVector product_char(const SurfaceGeom& S, long x, long a, long b, long ch2) {
    return char_from_lattice(S, Int(x), {Rat(a), Rat(b)}, Rat(ch2));
}

inline std::optional<CharVector> try_char(const SurfaceGeom& S, long x, LatticeVec c1, Rat ch2,
                                          bool strict = false) {
    try {
        return char_from_lattice(S, Int(x), c1, ch2, strict);
    } catch (const InvalidCharacterError&) {
        return std::nullopt;
    }
}

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(const std::string& msg) {
        ++failures;
        if (first_failure.empty()) first_failure = msg;
    }
    bool ok(std::size_t min_cases = 10000) const { return failures == 0 && cases >= min_cases; }
};

inline long rnd(std::mt19937& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

// (a) For x > 0 the squared radius of every locus with a well-defined centre
// equals (C - y1/x)^2 - F.
inline SuiteResult suite_radius_center_identity() {
    SuiteResult res{"radius-centre identity"};
    SurfaceGeom P = make_ppas(), Q = make_product();
    std::mt19937 gen(11);
    for (std::size_t it = 0; res.cases < 10000 && it < 400000; ++it) {
        bool on_product = it % 2 == 1;
        const SurfaceGeom& S = on_product ? Q : P;
        std::optional<CharVector> v, w;
        Rat u = 0;
        if (on_product) {
            v = try_char(S, rnd(gen, 1, 4), {Rat(rnd(gen, -6, 6)), Rat(rnd(gen, -6, 6))},
                         Rat(rnd(gen, -10, 10)));
            w = try_char(S, rnd(gen, 0, 4), {Rat(rnd(gen, -6, 6)), Rat(rnd(gen, -6, 6))},
                         Rat(rnd(gen, -10, 10)));
            u = Rat(rnd(gen, -8, 8), 4);
        } else {
            v = try_char(S, rnd(gen, 1, 4), {Rat(rnd(gen, -8, 8))}, Rat(rnd(gen, -10, 10)));
            w = try_char(S, rnd(gen, 0, 4), {Rat(rnd(gen, -8, 8))}, Rat(rnd(gen, -10, 10)));
        }
        if (!v || !w) continue;
        WallLocus loc = wall_circle(S, *v, *w, u);
        Rat C, Rsq;
        if (auto* sc = std::get_if<SemiCircle>(&loc)) {
            C = sc->C;
            Rsq = sc->Rsq;
        } else if (auto* el = std::get_if<EmptyLocus>(&loc)) {
            C = el->C;
            Rsq = el->Rsq;
        } else {
            continue;
        }
        ++res.cases;
        if (Rsq != radius_sq_from_center(S, *v, C, u))
            res.fail("Rsq != (C - y1/x)^2 - F at C = " + to_string(C));
    }
    return res;
}

// (b) For x = 0 every locus with a centre has the same centre
// (z + d u y2) / (g y1), independent of the witness.
inline SuiteResult suite_rank0_center_constant() {
    SuiteResult res{"rank-0 centre constancy"};
    SurfaceGeom P = make_ppas(), Q = make_product();
    std::mt19937 gen(12);
    for (std::size_t it = 0; res.cases < 10000 && it < 400000; ++it) {
        bool on_product = it % 2 == 1;
        const SurfaceGeom& S = on_product ? Q : P;
        std::optional<CharVector> v, w;
        Rat u = 0;
        if (on_product) {
            long a = rnd(gen, 0, 6), b = rnd(gen, 0, 6);
            if (a + b == 0) continue;
            v = try_char(S, 0, {Rat(a), Rat(b)}, Rat(rnd(gen, -12, 12)));
            w = try_char(S, rnd(gen, 1, 5), {Rat(rnd(gen, -6, 6)), Rat(rnd(gen, -6, 6))},
                         Rat(rnd(gen, -10, 10)));
            u = Rat(rnd(gen, -8, 8), 4);
        } else {
            v = try_char(S, 0, {Rat(rnd(gen, 1, 6))}, Rat(rnd(gen, -12, 12)));
            w = try_char(S, rnd(gen, 1, 5), {Rat(rnd(gen, -8, 8))}, Rat(rnd(gen, -10, 10)));
        }
        if (!v || !w) continue;
        Rat expect = (v->z + S.d * u * v->y2) / (S.g * v->y1);
        WallLocus loc = wall_circle(S, *v, *w, u);
        Rat C;
        if (auto* sc = std::get_if<SemiCircle>(&loc))
            C = sc->C;
        else if (auto* el = std::get_if<EmptyLocus>(&loc))
            C = el->C;
        else
            continue;
        ++res.cases;
        if (C != expect) res.fail("rank-0 centre " + to_string(C) + " != " + to_string(expect));
        Surd c0 = c_naught(S, *v, u);
        if (!c0.is_rational() || c0.rational_value() != expect)
            res.fail("c_naught disagrees with the fixed centre");
    }
    return res;
}

// (c) Equal slopes y1(w)/x(w) = y1(v)/x(v) give a vertical line at s = y1/x,
// or a coincident locus; never a circle.
inline SuiteResult suite_same_slope_vertical() {
    SuiteResult res{"same-slope vertical line"};
    SurfaceGeom P = make_ppas(), Q = make_product();
    std::mt19937 gen(13);
    for (std::size_t it = 0; res.cases < 10000 && it < 600000; ++it) {
        bool on_product = it % 2 == 1;
        const SurfaceGeom& S = on_product ? Q : P;
        long x = rnd(gen, 1, 5), r = rnd(gen, 1, 5);
        std::optional<CharVector> v, w;
        if (on_product) {
            long a = rnd(gen, -5, 5), b = rnd(gen, -5, 5);
            v = try_char(S, x, {Rat(a), Rat(b)}, Rat(rnd(gen, -8, 8)));
            if (!v) continue;
            // a class of rank r with the same slope: scale the omega part,
            // keep an arbitrary gamma part
            Rat aw = Rat(r) * v->y1 / Rat(x);
            long c2 = rnd(gen, -4, 4);
            LatticeVec c1w = {aw - Rat(c2), aw + Rat(c2)};
            w = try_char(S, r, c1w, Rat(rnd(gen, -8, 8)));
        } else {
            long j = rnd(gen, -6, 6);
            v = try_char(S, x, {Rat(j)}, Rat(rnd(gen, -8, 8)));
            if (!v) continue;
            Rat aw = Rat(r) * v->y1 / Rat(x);
            if (!is_integer(aw)) continue;
            w = try_char(S, r, {aw}, Rat(rnd(gen, -8, 8)));
        }
        if (!v || !w) continue;
        ++res.cases;
        WallLocus loc = wall_circle(S, *v, *w, Rat(rnd(gen, -4, 4), 2));
        if (auto* vl = std::get_if<VerticalLine>(&loc)) {
            if (vl->s != v->y1 / Rat(v->x)) res.fail("vertical line not at s = y1/x");
        } else if (!std::holds_alternative<CoincidentLocus>(loc)) {
            res.fail("same-slope pair produced a circle");
        }
    }
    return res;
}

// (d) F >= 0 for every positive-rank class satisfying the Bogomolov
// inequality, at every slice parameter; and the quadratic form in u agrees
// with the direct evaluation.
inline SuiteResult suite_bogomolov_F_nonneg() {
    SuiteResult res{"F >= 0 under Bogomolov"};
    SurfaceGeom P = make_ppas(), Q = make_product();
    std::mt19937 gen(14);
    for (std::size_t it = 0; res.cases < 10000 && it < 400000; ++it) {
        bool on_product = it % 2 == 1;
        const SurfaceGeom& S = on_product ? Q : P;
        long x = rnd(gen, 1, 5);
        LatticeVec c1 = on_product ? LatticeVec{Rat(rnd(gen, -6, 6)), Rat(rnd(gen, -6, 6))}
                                   : LatticeVec{Rat(rnd(gen, -8, 8))};
        // force the Bogomolov inequality by capping ch2
        Rat c1sq = S.pair(c1, c1);
        Rat ch2 = Rat(rat_floor(c1sq / (2 * x))) - Rat(rnd(gen, 0, 10));
        auto v = try_char(S, x, c1, ch2, /*strict=*/true);
        if (!v) continue;
        ++res.cases;
        Rat u = on_product ? Rat(rnd(gen, -8, 8), 4) : Rat(0);
        Rat F = F_value(S, *v, u);
        if (F < 0) res.fail("F < 0 for a Bogomolov class: F = " + to_string(F));
        if (F_in_u(S, *v).eval(u) != F) res.fail("F quadratic disagrees with direct evaluation");
    }
    return res;
}

// (g) Twisting both classes by exp(n*omega) shifts every locus n units to the
// right and preserves the squared radius.
inline SuiteResult suite_twist_shift() {
    SuiteResult res{"twist shift"};
    SurfaceGeom P = make_ppas(), Q = make_product();
    std::mt19937 gen(15);
    for (std::size_t it = 0; res.cases < 10000 && it < 400000; ++it) {
        bool on_product = it % 2 == 1;
        const SurfaceGeom& S = on_product ? Q : P;
        std::optional<CharVector> v, w;
        Rat u = 0;
        if (on_product) {
            v = try_char(S, rnd(gen, 1, 4), {Rat(rnd(gen, -5, 5)), Rat(rnd(gen, -5, 5))},
                         Rat(rnd(gen, -8, 8)));
            w = try_char(S, rnd(gen, 0, 4), {Rat(rnd(gen, -5, 5)), Rat(rnd(gen, -5, 5))},
                         Rat(rnd(gen, -8, 8)));
            u = Rat(rnd(gen, -6, 6), 4);
        } else {
            v = try_char(S, rnd(gen, 1, 4), {Rat(rnd(gen, -6, 6))}, Rat(rnd(gen, -8, 8)));
            w = try_char(S, rnd(gen, 0, 4), {Rat(rnd(gen, -6, 6))}, Rat(rnd(gen, -8, 8)));
        }
        if (!v || !w) continue;
        Int n(rnd(gen, -3, 3));
        CharVector tv = twist_by_omega(S, *v, n), tw = twist_by_omega(S, *w, n);
        WallLocus a = wall_circle(S, *v, *w, u);
        WallLocus b = wall_circle(S, tv, tw, u);
        ++res.cases;
        if (a.index() != b.index()) {
            res.fail("twist changed the locus type");
            continue;
        }
        Rat shift(n);
        if (auto* sa = std::get_if<SemiCircle>(&a)) {
            auto* sb = std::get_if<SemiCircle>(&b);
            if (sb->C != sa->C + shift || sb->Rsq != sa->Rsq)
                res.fail("twisted circle is not the shifted circle");
        } else if (auto* la = std::get_if<VerticalLine>(&a)) {
            auto* lb = std::get_if<VerticalLine>(&b);
            if (lb->s != la->s + shift) res.fail("twisted vertical line is not shifted");
        } else if (auto* ea = std::get_if<EmptyLocus>(&a)) {
            auto* eb = std::get_if<EmptyLocus>(&b);
            if (eb->C != ea->C + shift || eb->Rsq != ea->Rsq)
                res.fail("twisted empty locus is not shifted");
        }
    }
    return res;
}

// (h) The pseudo-wall through an interior point (s0, t) passes through the
// point and has the mandated centre-radius relation.
inline SuiteResult suite_through_point_roundtrip() {
    SuiteResult res{"wall through point round-trip"};
    SurfaceGeom P = make_ppas(), Q = make_product();
    std::mt19937 gen(16);
    for (std::size_t it = 0; res.cases < 10000 && it < 400000; ++it) {
        bool on_product = it % 2 == 1;
        const SurfaceGeom& S = on_product ? Q : P;
        std::optional<CharVector> v;
        Rat u = 0;
        if (on_product) {
            v = try_char(S, rnd(gen, 1, 4), {Rat(rnd(gen, -5, 5)), Rat(rnd(gen, -5, 5))},
                         Rat(rnd(gen, -8, 8)));
            u = Rat(rnd(gen, -6, 6), 4);
        } else {
            v = try_char(S, rnd(gen, 1, 4), {Rat(rnd(gen, -6, 6))}, Rat(rnd(gen, -8, 8)));
        }
        if (!v) continue;
        Rat mu = v->y1 / Rat(v->x);
        Rat s0 = mu - Rat(rnd(gen, 1, 40), 8);
        Rat t_sq = Rat(rnd(gen, 1, 40), 8);
        SemiCircle sc = wall_through_point(S, *v, u, s0, t_sq);
        ++res.cases;
        if ((s0 - sc.C) * (s0 - sc.C) + t_sq != sc.Rsq)
            res.fail("circle misses the prescribed point");
        if (sc.Rsq != radius_sq_from_center(S, *v, sc.C, u))
            res.fail("through-point circle violates the centre-radius relation");
    }
    return res;
}

// (e)/(f) Enumerate wall sets for a spread of characters; every pair of
// circles must be nested or equal, every circle must straddle s = C0 and fit
// inside the outer pseudo-wall bound.
inline std::pair<SuiteResult, SuiteResult> suite_wallset_geometry() {
    SuiteResult nest{"wall sets are nested"};
    SuiteResult strad{"circles straddle C0 and obey the outer bound"};
    SurfaceGeom P = make_ppas(), Q = make_product();
    std::mt19937 gen(17);
    EnumFilters f;
    f.rank_max = Int(6);
    f.radius_sq_min = Rat(1, 100);
    f.threads = 4;
    for (std::size_t it = 0; (nest.cases < 10000 || strad.cases < 10000) && it < 2000; ++it) {
        bool on_product = it % 4 == 3;
        const SurfaceGeom& S = on_product ? Q : P;
        std::optional<CharVector> v;
        Rat u = 0;
        if (on_product) {
            long a = rnd(gen, 1, 3), b = rnd(gen, 1, 3);
            v = try_char(S, rnd(gen, 1, 2), {Rat(a), Rat(b)}, Rat(a * b - rnd(gen, 0, 12)), true);
            u = Rat(rnd(gen, -2, 2), 4);
        } else {
            long x = rnd(gen, 1, 2), j = rnd(gen, 1, 3);
            v = try_char(S, x, {Rat(j)},
                         Rat(rat_floor(Rat(j * j, x))) - Rat(rnd(gen, 0, 18)), true);
        }
        if (!v || !bogomolov(S, *v).holds) continue;
        WallSet ws = enumerate_walls(S, *v, u, f);
        NestingReport nr = verify_nesting(ws);
        nest.cases += ws.circles.size() * (ws.circles.size() - 1) / 2;
        if (!nr.nested) nest.fail("non-nested pair in an enumerated wall set");
        if (v->x == 0 || !ws.report.C0 || !ws.report.R0) continue;
        const Surd& c0 = *ws.report.C0;
        Rat r0sq = *ws.report.R0 * *ws.report.R0;
        for (const WallCircleEntry& e : ws.circles) {
            ++strad.cases;
            bool straddles = surd_lt(Surd(e.C, Rat(-1), e.Rsq), c0) &&
                             surd_lt(c0, Surd(e.C, Rat(1), e.Rsq));
            if (!straddles)
                strad.fail("circle (" + to_string(e.C) + ", " + to_string(e.Rsq) +
                           ") does not straddle C0");
            if (e.Rsq > r0sq) strad.fail("circle exceeds the outer pseudo-wall radius");
        }
    }
    return {nest, strad};
}

namespace detail {

// Exhaustive box scan on the rank-1 abelian surface lattice: every class
// w = (r, j*omega, j^2 + t) in the box, filtered exactly like the enumerator
// but with no search-window logic at all.
struct BruteCircle {
    std::vector<std::tuple<Int, Rat, Rat>> wits;  // (x, y1, ch2)
};

inline std::map<std::pair<Rat, Rat>, BruteCircle> brute_scan_ppas(const SurfaceGeom& S,
                                                                  const CharVector& v, long rmax,
                                                                  const Rat& rsq_min) {
    std::map<std::pair<Rat, Rat>, BruteCircle> out;
    for (long r = 0; r <= rmax; ++r) {
        for (long j = -10; j <= 10; ++j) {
            if (r == 0 && j <= 0) continue;  // not a character
            for (long t = -80; t <= 80; ++t) {
                Rat zw = Rat(j) * j + t;
                CharVector w;
                w.x = r;
                w.y1 = j;
                w.y2 = 0;
                w.alpha_sq = 0;
                w.z = zw;
                WallLocus loc = wall_circle(S, v, w, Rat(0));
                auto* sc = std::get_if<SemiCircle>(&loc);
                if (!sc || sc->Rsq < rsq_min) continue;
                Rat C = sc->C, Rsq = sc->Rsq;
                Rat rr(r), x(v.x);
                bool bog_sub = S.g * j * j - 2 * rr * zw >= 0;
                Rat quot = S.g * (v.y1 - j) * (v.y1 - j);
                bool bog_quot = quot - 2 * (x - rr) * (v.z - zw) >= 0;
                auto nonneg = [&](const Rat& A, const Rat& B) {
                    return sign(Surd(A, B, Rsq)) >= 0;
                };
                Rat dx = x - rr;
                bool heart = nonneg(Rat(j) - rr * C, -rr) && nonneg(Rat(j) - rr * C, rr) &&
                             nonneg(v.y1 - j - dx * C, -dx) && nonneg(v.y1 - j - dx * C, dx);
                if (!(bog_sub && bog_quot && heart)) continue;
                out[{C, Rsq}].wits.emplace_back(Int(r), Rat(j), zw);
            }
        }
    }
    return out;
}

}  // namespace detail

// (i) The enumerator agrees with a plain box scan on the degree-(4-k)
// rank-one scenarios, k <= 4.
inline SuiteResult suite_brute_force_equivalence() {
    SuiteResult res{"box-scan equivalence"};
    SurfaceGeom S = make_ppas();
    EnumFilters f;
    f.rank_max = Int(8);
    f.radius_sq_min = Rat(1, 100);
    for (long k = 1; k <= 4; ++k) {
        CharVector v = ppas_char(S, 1, 2, 4 - k);
        auto brute = detail::brute_scan_ppas(S, v, 8, *f.radius_sq_min);
        res.cases += 9 * 21 * 161;
        WallSet ws = enumerate_walls(S, v, Rat(0), f);
        if (ws.circles.size() != brute.size()) {
            res.fail("circle count mismatch at k = " + std::to_string(k));
            continue;
        }
        std::size_t idx = 0;
        for (auto& [key, bc] : brute) {
            const WallCircleEntry& e = ws.circles[idx++];
            if (e.C != key.first || e.Rsq != key.second) {
                res.fail("circle data mismatch at k = " + std::to_string(k));
                continue;
            }
            if (e.witnesses.size() != bc.wits.size()) {
                res.fail("witness count mismatch at k = " + std::to_string(k));
                continue;
            }
            for (std::size_t i = 0; i < bc.wits.size(); ++i) {
                const auto& [bx, by1, bz] = bc.wits[i];
                const CharVector& w = e.witnesses[i].w;
                if (w.x != bx || w.y1 != by1 || w.z != bz)
                    res.fail("witness mismatch at k = " + std::to_string(k));
            }
        }
    }
    return res;
}

inline std::string suite_line(const SuiteResult& r, std::size_t min_cases = 10000) {
    std::ostringstream os;
    os << (r.ok(min_cases) ? "pass" : "FAIL") << "  " << r.name << "  (" << r.cases << " cases, "
       << r.failures << " failures";
    if (!r.first_failure.empty()) os << "; first: " << r.first_failure;
    os << ")";
    return os.str();
}

}  // namespace testutil
