#include "walls/enumerate.hpp"

#include "walls/errors.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <utility>

namespace walls {

namespace {

struct Candidate {
    CharVector w;
    WitnessFlags flags;
    Rat C, Rsq;
    bool vertical = false;
    Rat line_s;
    bool pass = false;
    bool radius_ok = true;
};

struct SliceOut {
    std::vector<Candidate> items;
};

struct Ctx {
    const SurfaceGeom& S;
    const CharVector& v;
    Rat u;
    const EnumFilters& f;
    Rat x, y1, y2, z;  // components of v
    Rat F;             // x > 0 only
    Surd C0;
    Rat C_lower;  // x > 0, F > 0 only
    Rat fixedC;   // x = 0 only
    std::vector<Rat> alpha_set;
};

// (c1(v) - c1(w))^2 with the convention that the orthogonal parts of v and w
// are themselves orthogonal, so the cross term vanishes.
Rat quot_disc(const Ctx& c, const Rat& a, const Rat& c2, const Rat& alpha2) {
    return c.S.g * (c.y1 - a) * (c.y1 - a) - c.S.d * (c.y2 - c2) * (c.y2 - c2) + c.v.alpha_sq +
           alpha2;
}

WitnessFlags circle_flags(const Ctx& c, const CharVector& w, const Rat& C, const Rat& Rsq) {
    WitnessFlags fl;
    Rat rr(w.x);
    Rat c1w2 = w.c1_sq(c.S);
    fl.bogomolov_sub = c1w2 - 2 * rr * w.z >= 0;
    Rat Q = quot_disc(c, w.y1, w.y2, w.alpha_sq);
    fl.bogomolov_quotient = Q - 2 * (c.x - rr) * (c.z - w.z) >= 0;
    fl.integrality = is_integer(w.z - c1w2 / 2);
    // heart condition 0 <= Im Z(w) <= Im Z(v) at both endpoints s = C +- R,
    // each check a sign of an element of Q(sqrt(Rsq))
    auto nonneg = [&](const Rat& A, const Rat& B) { return sign(Surd(A, B, Rsq)) >= 0; };
    Rat dx = c.x - rr;
    fl.heart = nonneg(w.y1 - rr * C, -rr) && nonneg(w.y1 - rr * C, rr) &&
               nonneg(c.y1 - w.y1 - dx * C, -dx) && nonneg(c.y1 - w.y1 - dx * C, dx);
    return fl;
}

void emit_circle_candidate(const Ctx& c, SliceOut& out, CharVector w) {
    WallLocus loc = wall_circle(c.S, c.v, w, c.u);
    auto* sc = std::get_if<SemiCircle>(&loc);
    if (!sc) return;  // degenerate radius, not a wall
    Candidate cand;
    cand.C = sc->C;
    cand.Rsq = sc->Rsq;
    cand.flags = circle_flags(c, w, cand.C, cand.Rsq);
    cand.pass = cand.flags.passes(c.f);
    cand.radius_ok = !c.f.radius_sq_min || cand.Rsq >= *c.f.radius_sq_min;
    cand.w = std::move(w);
    out.items.push_back(std::move(cand));
}

void chi_scan(const Ctx& c, const Int& r, const Rat& a, const Rat& c2, const Rat& alpha2,
              const std::optional<LatticeVec>& lat, const Int& kmin, const Int& kmax,
              const Rat& base, const Rat& step, SliceOut& out) {
    for (Int k = kmin; k <= kmax; ++k) {
        CharVector w;
        w.x = r;
        w.y1 = a;
        w.y2 = c2;
        w.alpha_sq = alpha2;
        w.z = base + step * Rat(k);
        w.c1_lattice = lat;
        emit_circle_candidate(c, out, std::move(w));
    }
}

// chi range for x > 0 from C in [C_lower, C0), plus the enabled Bogomolov
// caps; chi(C) = (g(x a - r y1) C + r z - u d (x c2 - r y2)) / x.
void chi_loop_pos(const Ctx& c, const Int& r, const Rat& a, const Rat& c2, const Rat& alpha2,
                  const std::optional<LatticeVec>& lat, SliceOut& out) {
    Rat rr(r);
    Rat slope_gap = c.x * a - rr * c.y1;
    Rat denomC = c.S.g * slope_gap;
    Rat c1w2 = c.S.g * a * a - c.S.d * c2 * c2 + alpha2;
    Rat base = c.f.require_integrality ? c1w2 / 2 : Rat(0);
    Rat step = c.f.require_integrality ? Rat(1) : Rat(1, 2);
    Rat K = rr * c.z - c.u * c.S.d * (c.x * c2 - rr * c.y2);
    Rat chi_rat = (denomC * c.C_lower + K) / c.x;
    Surd chi_irr = (denomC / c.x) * c.C0 + (K / c.x);
    Int kmin, kmax;
    Rat inv_step = Rat(1) / step;
    if (slope_gap > 0) {
        kmin = rat_ceil((chi_rat - base) / step);
        kmax = ceil_surd(inv_step * (chi_irr - base)) - 1;
    } else {
        kmin = floor_surd(inv_step * (chi_irr - base)) + 1;
        kmax = rat_floor((chi_rat - base) / step);
    }
    auto cap_hi = [&](const Rat& cap) { kmax = std::min(kmax, rat_floor((cap - base) / step)); };
    auto cap_lo = [&](const Rat& cap) { kmin = std::max(kmin, rat_ceil((cap - base) / step)); };
    if (c.f.require_bogomolov_sub && r > 0) cap_hi(c1w2 / (2 * rr));
    if (c.f.require_bogomolov_quotient) {
        Rat Q = quot_disc(c, a, c2, alpha2);
        if (r < c.v.x)
            cap_lo(c.z - Q / (2 * (c.x - rr)));
        else if (r > c.v.x)
            cap_hi(c.z + Q / (2 * (rr - c.x)));
        else if (Q < 0)
            return;  // quotient has rank 0 and negative discriminant: no chi works
    }
    chi_scan(c, r, a, c2, alpha2, lat, kmin, kmax, base, step, out);
}

// Integer-coordinate lattice classes a*omega + c2*gamma with c2 in
// [c2lo, c2hi]; Picard rank 2 only.
template <class Fn>
void for_each_c2(const Ctx& c, const Rat& a, const Surd& c2lo, const Surd& c2hi, Fn&& fn) {
    const auto& om = c.S.omega;
    const auto& ga = c.S.gamma;
    std::size_t i0 = 0;
    while (ga[i0] == 0) ++i0;
    Rat g0 = ga[i0];
    Surd end_a = g0 * c2lo + a * om[i0];
    Surd end_b = g0 * c2hi + a * om[i0];
    if (g0 < 0) std::swap(end_a, end_b);
    Int mhi = floor_surd(end_b);
    for (Int m = ceil_surd(end_a); m <= mhi; ++m) {
        Rat c2 = (Rat(m) - a * om[i0]) / g0;
        LatticeVec lat(om.size());
        bool integral = true;
        for (std::size_t i = 0; i < om.size(); ++i) {
            lat[i] = a * om[i] + c2 * ga[i];
            integral = integral && is_integer(lat[i]);
        }
        if (integral) fn(c2, lat);
    }
}

void vertical_rep(const Ctx& c, const Int& r, const Rat& a, SliceOut& out) {
    Rat rr(r);
    Rat c2 = c.S.d > 0 ? rr * c.y2 / c.x : Rat(0);
    Rat c1w2 = c.S.g * a * a - c.S.d * c2 * c2;
    Rat chi = c1w2 / 2;
    if (c.x * chi - rr * c.z + c.u * c.S.d * (c.x * c2 - rr * c.y2) == 0) chi += 1;
    CharVector w;
    w.x = r;
    w.y1 = a;
    w.y2 = c2;
    w.alpha_sq = 0;
    w.z = chi;
    WallLocus loc = wall_circle(c.S, c.v, w, c.u);
    auto* vl = std::get_if<VerticalLine>(&loc);
    if (!vl) return;
    Candidate cand;
    cand.vertical = true;
    cand.line_s = vl->s;
    Rat sv = vl->s;
    cand.flags.heart = a - rr * sv >= 0 && a - rr * sv <= c.y1 - c.x * sv;
    cand.flags.bogomolov_sub = c1w2 - 2 * rr * chi >= 0;
    cand.flags.bogomolov_quotient =
        quot_disc(c, a, c2, Rat(0)) - 2 * (c.x - rr) * (c.z - chi) >= 0;
    cand.flags.integrality = is_integer(chi - c1w2 / 2);
    cand.pass = cand.flags.passes(c.f);
    cand.w = std::move(w);
    out.items.push_back(std::move(cand));
}

void rank_slice_pos(const Ctx& c, const Int& r, SliceOut& out) {
    Rat rr(r);
    auto [loW, hiW] = c1_window(c.S, c.v, r, c.u);
    Int jmax = ceil_surd(c.S.gprime * hiW) - 1;
    for (Int j = floor_surd(c.S.gprime * loW) + 1; j <= jmax; ++j) {
        Rat a = Rat(j) / c.S.gprime;
        Rat slope_gap = c.x * a - rr * c.y1;
        if (slope_gap == 0) {
            vertical_rep(c, r, a, out);
            continue;
        }
        for (const Rat& alpha2 : c.alpha_set) {
            if (c.S.d == 0) {
                chi_loop_pos(c, r, a, Rat(0), alpha2, std::nullopt, out);
                continue;
            }
            // c2 interval from the sub-object Bogomolov inequality with chi at
            // its smallest admissible value (chi = chi_tilde - u d c2)
            Rat denomC = c.S.g * slope_gap;
            Rat Kt = rr * c.z + c.u * c.S.d * rr * c.y2;
            Rat chi_tilde_lo;
            if (slope_gap > 0) {
                chi_tilde_lo = (denomC * c.C_lower + Kt) / c.x;
            } else {
                Surd at_c0 = (denomC / c.x) * c.C0 + (Kt / c.x);
                chi_tilde_lo = brackets(at_c0, 12).first;
            }
            Rat M = c.S.g * a * a + alpha2 + c.S.d * rr * rr * c.u * c.u - 2 * rr * chi_tilde_lo;
            if (M < 0) continue;
            Surd halfwidth = surd_sqrt(M / c.S.d);
            for_each_c2(c, a, (-halfwidth) + rr * c.u, halfwidth + rr * c.u,
                        [&](const Rat& c2, const LatticeVec& lat) {
                            chi_loop_pos(c, r, a, c2, alpha2, lat, out);
                        });
        }
    }
}

// x = 0: the centre C is fixed and chi = lin + (g r / 2)(Rsq - C^2) is an
// increasing affine function of the squared radius.
void chi_loop_zero(const Ctx& c, const Int& r, const Rat& a, const Rat& c2, const Rat& alpha2,
                   const std::optional<LatticeVec>& lat, SliceOut& out) {
    Rat rr(r);
    Rat C = c.fixedC;
    Rat A0 = (c.z * a + c.y2 * c.u * c.S.d * a) / c.y1 + rr * c.u * c.u * c.S.d / 2;
    Rat lin = A0 - c2 * c.u * c.S.d;
    Rat coef = c.S.g * rr / 2;
    Rat c1w2 = c.S.g * a * a - c.S.d * c2 * c2 + alpha2;
    Rat base = c.f.require_integrality ? c1w2 / 2 : Rat(0);
    Rat step = c.f.require_integrality ? Rat(1) : Rat(1, 2);
    Int kmin;
    if (c.f.radius_sq_min)
        kmin = rat_ceil((lin + coef * (*c.f.radius_sq_min - C * C) - base) / step);
    else
        kmin = rat_floor((lin - coef * C * C - base) / step) + 1;  // Rsq > 0 strict
    std::optional<Rat> chi_cap;
    auto add_cap = [&](const Rat& cap) {
        if (!chi_cap || cap < *chi_cap) chi_cap = cap;
    };
    if (c.f.require_heart_condition)
        add_cap(lin + coef * (c.y1 * c.y1 / (4 * rr * rr) - C * C));  // 2 r R <= y1
    if (c.f.require_bogomolov_sub) add_cap(c1w2 / (2 * rr));
    if (c.f.require_bogomolov_quotient) add_cap(c.z + quot_disc(c, a, c2, alpha2) / (2 * rr));
    if (!chi_cap)
        throw NonTerminatingError(
            "cannot bound chi for a rank-0 class: enable the heart or a Bogomolov filter");
    Int kmax = rat_floor((*chi_cap - base) / step);
    chi_scan(c, r, a, c2, alpha2, lat, kmin, kmax, base, step, out);
}

void rank_slice_zero(const Ctx& c, const Int& r, SliceOut& out) {
    Rat rr(r);
    Rat lo = c.S.gprime * rr * c.fixedC;
    Rat hi = c.S.gprime * (c.y1 + rr * c.fixedC);
    Int jmax = rat_ceil(hi) - 1;
    for (Int j = rat_floor(lo) + 1; j <= jmax; ++j) {
        Rat a = Rat(j) / c.S.gprime;
        for (const Rat& alpha2 : c.alpha_set) {
            if (c.S.d == 0) {
                chi_loop_zero(c, r, a, Rat(0), alpha2, std::nullopt, out);
                continue;
            }
            Rat rsq_min = c.f.radius_sq_min ? *c.f.radius_sq_min : Rat(0);
            Rat A0 = (c.z * a + c.y2 * c.u * c.S.d * a) / c.y1 + rr * c.u * c.u * c.S.d / 2;
            Rat chi_tilde_lo = A0 + (c.S.g * rr / 2) * (rsq_min - c.fixedC * c.fixedC);
            Rat M = c.S.g * a * a + alpha2 + c.S.d * rr * rr * c.u * c.u - 2 * rr * chi_tilde_lo;
            if (M < 0) continue;
            Surd halfwidth = surd_sqrt(M / c.S.d);
            for_each_c2(c, a, (-halfwidth) + rr * c.u, halfwidth + rr * c.u,
                        [&](const Rat& c2, const LatticeVec& lat) {
                            chi_loop_zero(c, r, a, c2, alpha2, lat, out);
                        });
        }
    }
}

bool witness_less(const WitnessClass& A, const WitnessClass& B) {
    if (A.w.x != B.w.x) return A.w.x < B.w.x;
    if (A.w.y1 != B.w.y1) return A.w.y1 < B.w.y1;
    if (A.w.y2 != B.w.y2) return A.w.y2 < B.w.y2;
    if (A.w.alpha_sq != B.w.alpha_sq) return A.w.alpha_sq < B.w.alpha_sq;
    return A.w.z < B.w.z;
}

}  // namespace

WallSet enumerate_walls(const SurfaceGeom& S, const CharVector& v, const Rat& u,
                        const EnumFilters& f) {
    validate_character(S, v, /*strict=*/false);
    if (!bogomolov(S, v).holds)
        throw InvalidCharacterError("v must satisfy the Bogomolov inequality");
    if (!f.rank_max && !f.radius_sq_min)
        throw NonTerminatingError("set rank_max or radius_sq_min to make the search finite");
    if (f.radius_sq_min && *f.radius_sq_min <= 0)
        throw Error("radius_sq_min must be positive");
    if (f.rank_max && *f.rank_max <= 0) throw Error("rank_max must be positive");
    if (S.d > 0) {
        if (!f.require_bogomolov_sub)
            throw NonTerminatingError(
                "the sub-object Bogomolov filter is required to bound the gamma direction");
        if (S.picard_rank != 2)
            throw NonTerminatingError("gamma-direction enumeration requires Picard rank 2");
    }

    WallSet ws;
    ws.report = bounds_report(S, v, u);

    Ctx c{S, v, u, f};
    c.x = Rat(v.x);
    c.y1 = v.y1;
    c.y2 = v.y2;
    c.z = v.z;
    int alpha_dim = S.picard_rank - 1 - (S.d > 0 ? 1 : 0);
    if (alpha_dim <= 0) {
        c.alpha_set = {Rat(0)};
    } else {
        c.alpha_set = f.alpha_sq_set.empty() ? std::vector<Rat>{Rat(0)} : f.alpha_sq_set;
        for (const Rat& a2 : c.alpha_set)
            if (a2 > 0) throw Error("alpha_sq_set entries must be non-positive");
    }

    std::vector<Int> ranks;
    if (v.x > 0) {
        c.F = *ws.report.F;
        c.C0 = *ws.report.C0;
        if (c.F == 0) return ws;  // no walls at all
        c.C_lower = *ws.report.C_lower;
        std::optional<Int> cap;
        if (f.rank_max) cap = *f.rank_max;
        if (f.radius_sq_min && f.require_heart_condition) {
            // heart at both endpoints forces 2 r R <= y1 - x (C - R)
            Rat W = c.y1 - c.x * (*ws.report.s_min);
            Int ecap = W <= 0 ? Int(0) : isqrt(rat_floor(W * W / (4 * *f.radius_sq_min)));
            cap = cap ? std::min(*cap, ecap) : ecap;
        }
        if (!cap)
            throw NonTerminatingError("rank_max is required when the heart filter is disabled");
        for (Int r = 0; r <= *cap; ++r) ranks.push_back(r);
    } else {
        c.fixedC = *ws.report.rank0_center;
        c.C0 = Surd(c.fixedC);
        std::optional<Int> cap;
        if (f.rank_max) cap = *f.rank_max;
        if (f.radius_sq_min && f.require_heart_condition) {
            Int ecap = isqrt(rat_floor(c.y1 * c.y1 / (4 * *f.radius_sq_min)));
            cap = cap ? std::min(*cap, ecap) : ecap;
        }
        if (!cap)
            throw NonTerminatingError("rank_max is required when the heart filter is disabled");
        for (Int r = 1; r <= *cap; ++r) ranks.push_back(r);
    }

    std::vector<SliceOut> outs(ranks.size());
    auto run_slice = [&](std::size_t i) {
        if (v.x > 0)
            rank_slice_pos(c, ranks[i], outs[i]);
        else
            rank_slice_zero(c, ranks[i], outs[i]);
    };
    int nthreads = f.threads;
    if (nthreads > 1 && ranks.size() > 1) {
        std::size_t T = std::min<std::size_t>(static_cast<std::size_t>(nthreads), ranks.size());
        std::vector<std::future<void>> futs;
        for (std::size_t t = 0; t < T; ++t)
            futs.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t i = t; i < ranks.size(); i += T) run_slice(i);
            }));
        for (auto& fu : futs) fu.get();  // rethrows slice errors
    } else {
        for (std::size_t i = 0; i < ranks.size(); ++i) run_slice(i);
    }

    std::map<std::pair<Rat, Rat>, std::vector<WitnessClass>> circles;
    std::map<Rat, std::vector<WitnessClass>> lines;
    for (const SliceOut& out : outs) {
        for (const Candidate& cand : out.items) {
            if (cand.vertical) {
                if (cand.pass) {
                    lines[cand.line_s].push_back({cand.w, cand.flags});
                } else {
                    ws.near_miss_total += 1;
                    if (ws.near_misses.size() < 64)
                        ws.near_misses.push_back({cand.w, cand.line_s, Rat(0), cand.flags});
                }
            } else if (cand.pass) {
                if (cand.radius_ok) circles[{cand.C, cand.Rsq}].push_back({cand.w, cand.flags});
            } else {
                ws.near_miss_total += 1;
                if (ws.near_misses.size() < 64)
                    ws.near_misses.push_back({cand.w, cand.C, cand.Rsq, cand.flags});
            }
        }
    }
    for (auto& [key, wits] : circles) {
        std::sort(wits.begin(), wits.end(), witness_less);
        ws.circles.push_back({key.first, key.second, std::move(wits)});
    }
    for (auto& [sv, wits] : lines) {
        std::sort(wits.begin(), wits.end(), witness_less);
        ws.vertical_lines.push_back({sv, std::move(wits)});
    }

    if (v.x > 0) {
        for (const WallCircleEntry& e : ws.circles) {
            bool ok = e.C >= c.C_lower && surd_lt(Surd(e.C), c.C0) &&
                      surd_lt(Surd(e.C, Rat(-1), e.Rsq), c.C0) &&
                      surd_lt(c.C0, Surd(e.C, Rat(1), e.Rsq)) &&
                      e.Rsq <= (*ws.report.R0) * (*ws.report.R0);
            if (!ok) throw Error("internal: enumerated circle escapes the envelope");
        }
    }
    return ws;
}

NestingReport verify_nesting(const WallSet& ws) {
    NestingReport rep;
    for (std::size_t i = 0; i < ws.circles.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.circles.size(); ++j) {
            CircleRelation rel = classify_circles(ws.circles[i].C, ws.circles[i].Rsq,
                                                  ws.circles[j].C, ws.circles[j].Rsq);
            if (rel != CircleRelation::Equal && rel != CircleRelation::Nested) {
                rep.nested = false;
                rep.violations.push_back({i, j, rel});
            }
        }
    }
    return rep;
}

RaySlice miniwalls_on_ray(const WallSet& ws, const Rat& s0) {
    RaySlice out;
    for (const WallCircleEntry& e : ws.circles) {
        Rat gap = (s0 - e.C) * (s0 - e.C);
        if (gap < e.Rsq) out.miniwalls.push_back({e.Rsq - gap, e.C, e.Rsq, e.witnesses});
    }
    std::sort(out.miniwalls.begin(), out.miniwalls.end(), [](const MiniWall& a, const MiniWall& b) {
        if (a.t_sq != b.t_sq) return a.t_sq > b.t_sq;
        return a.C < b.C;
    });
    for (const VerticalLineEntry& l : ws.vertical_lines)
        if (l.s == s0) out.lines_at_s0.push_back(l);
    return out;
}

}  // namespace walls
