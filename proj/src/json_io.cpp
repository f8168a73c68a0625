#include "walls/json_io.hpp"

#include "walls/errors.hpp"

#include <fstream>

namespace walls {

namespace {

Rat jrat(const Json& j, const std::string& what) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw ParseError(what + ": expected a rational string or an integer");
}

Int jint(const Json& j, const std::string& what) {
    Rat q = jrat(j, what);
    if (!is_integer(q)) throw ParseError(what + ": expected an integer");
    return num(q);
}

LatticeVec jvec(const Json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array");
    LatticeVec out;
    for (const Json& e : j) out.push_back(jrat(e, what));
    return out;
}

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const Surd& s) {
    Json o;
    o["a"] = to_string(s.a);
    o["b"] = to_string(s.b);
    o["c"] = to_string(s.c);
    o["decimal"] = decimal(s);
    return o;
}

Json to_json(const SurfaceGeom& s) {
    Json o;
    o["picard_rank"] = s.picard_rank;
    Json gram = Json::array();
    for (const auto& row : s.gram) {
        Json r = Json::array();
        for (const Int& e : row) r.push_back(to_string(e));
        gram.push_back(std::move(r));
    }
    o["gram"] = std::move(gram);
    Json om = Json::array(), ga = Json::array();
    for (const Rat& e : s.omega) om.push_back(to_string(e));
    for (const Rat& e : s.gamma) ga.push_back(to_string(e));
    o["omega"] = std::move(om);
    o["gamma"] = std::move(ga);
    o["gtilde"] = to_string(s.gtilde);
    return o;
}

Json to_json(const CharVector& v) {
    Json o;
    o["rank"] = to_string(v.x);
    o["y1"] = to_string(v.y1);
    o["y2"] = to_string(v.y2);
    o["alpha_sq"] = to_string(v.alpha_sq);
    o["ch2"] = to_string(v.z);
    if (v.c1_lattice) {
        Json c1 = Json::array();
        for (const Rat& e : *v.c1_lattice) c1.push_back(to_string(e));
        o["c1"] = std::move(c1);
    }
    return o;
}

Json to_json(const EnumFilters& f) {
    Json o;
    o["require_bogomolov_sub"] = f.require_bogomolov_sub;
    o["require_bogomolov_quotient"] = f.require_bogomolov_quotient;
    o["require_heart_condition"] = f.require_heart_condition;
    o["require_integrality"] = f.require_integrality;
    if (f.rank_max) o["rank_max"] = to_string(*f.rank_max);
    if (f.radius_sq_min) o["radius_sq_min"] = to_string(*f.radius_sq_min);
    Json as = Json::array();
    for (const Rat& a : f.alpha_sq_set) as.push_back(to_string(a));
    o["alpha_sq_set"] = std::move(as);
    o["threads"] = f.threads;
    return o;
}

Json to_json(const WitnessClass& w) {
    Json o = to_json(w.w);
    Json fl;
    fl["heart"] = w.flags.heart;
    fl["bogomolov_sub"] = w.flags.bogomolov_sub;
    fl["bogomolov_quotient"] = w.flags.bogomolov_quotient;
    fl["integrality"] = w.flags.integrality;
    o["flags"] = std::move(fl);
    return o;
}

Json to_json(const BoundsReport& r) {
    Json o;
    if (r.p) o["p"] = to_string(*r.p);
    if (r.xi) o["xi"] = to_string(*r.xi);
    if (r.mn) {
        o["m"] = to_string(r.mn->m);
        o["n"] = to_string(r.mn->n);
    }
    if (r.F) o["F"] = to_string(*r.F);
    if (r.F_u) {
        Json q;
        q["a"] = to_string(r.F_u->a);
        q["b"] = to_string(r.F_u->b);
        q["c"] = to_string(r.F_u->c);
        o["F_u"] = std::move(q);
    }
    if (r.C0) o["C0"] = to_json(*r.C0);
    if (r.C_lower) {
        o["C_lower"] = to_string(*r.C_lower);
        o["R0"] = to_string(*r.R0);
        o["s_min"] = to_string(*r.s_min);
        o["s_max"] = to_string(*r.s_max);
        o["formula"] = r.formula;
    }
    if (!r.variants.empty()) {
        Json vs = Json::array();
        for (const BoundsVariant& v : r.variants) {
            Json e;
            e["label"] = v.label;
            e["m"] = to_string(v.mn.m);
            e["n"] = to_string(v.mn.n);
            e["C_lower"] = to_string(v.C_lower);
            e["R0"] = to_string(v.R0);
            e["s_min"] = to_string(v.s_min);
            e["s_max"] = to_string(v.s_max);
            vs.push_back(std::move(e));
        }
        o["variants"] = std::move(vs);
    }
    o["F_zero_no_walls"] = r.F_zero_no_walls;
    if (r.rank0_radius_bound) o["rank0_radius_bound"] = to_string(*r.rank0_radius_bound);
    if (r.rank0_center) o["rank0_center"] = to_string(*r.rank0_center);
    return o;
}

Json to_json(const WallLocus& l) {
    Json o;
    if (const auto* sc = std::get_if<SemiCircle>(&l)) {
        o["type"] = "circle";
        o["C"] = to_string(sc->C);
        o["Rsq"] = to_string(sc->Rsq);
        o["C_decimal"] = decimal(sc->C);
        o["R_decimal"] = sqrt_decimal(sc->Rsq);
    } else if (const auto* vl = std::get_if<VerticalLine>(&l)) {
        o["type"] = "vertical_line";
        o["s"] = to_string(vl->s);
    } else if (const auto* el = std::get_if<EmptyLocus>(&l)) {
        o["type"] = "empty";
        o["C"] = to_string(el->C);
        o["Rsq"] = to_string(el->Rsq);
    } else {
        o["type"] = "coincident";
    }
    return o;
}

Json to_json(const WallSet& ws) {
    Json o;
    Json cs = Json::array();
    for (const WallCircleEntry& e : ws.circles) {
        Json c;
        c["C"] = to_string(e.C);
        c["Rsq"] = to_string(e.Rsq);
        c["C_decimal"] = decimal(e.C);
        c["R_decimal"] = sqrt_decimal(e.Rsq);
        Json wits = Json::array();
        for (const WitnessClass& w : e.witnesses) wits.push_back(to_json(w));
        c["witnesses"] = std::move(wits);
        cs.push_back(std::move(c));
    }
    o["circles"] = std::move(cs);
    Json ls = Json::array();
    for (const VerticalLineEntry& e : ws.vertical_lines) {
        Json c;
        c["s"] = to_string(e.s);
        Json wits = Json::array();
        for (const WitnessClass& w : e.witnesses) wits.push_back(to_json(w));
        c["witnesses"] = std::move(wits);
        ls.push_back(std::move(c));
    }
    o["vertical_lines"] = std::move(ls);
    o["bounds"] = to_json(ws.report);
    Json nm = Json::array();
    for (const NearMiss& e : ws.near_misses) {
        Json c = to_json(WitnessClass{e.w, e.flags});
        c["C"] = to_string(e.C);
        c["Rsq"] = to_string(e.Rsq);
        nm.push_back(std::move(c));
    }
    o["near_misses"] = std::move(nm);
    o["near_miss_total"] = to_string(ws.near_miss_total);
    return o;
}

Json to_json(const NestingReport& r) {
    Json o;
    o["nested"] = r.nested;
    Json vs = Json::array();
    for (const NestingViolation& v : r.violations) {
        Json e;
        e["i"] = v.i;
        e["j"] = v.j;
        e["relation"] = to_string(v.relation);
        vs.push_back(std::move(e));
    }
    o["violations"] = std::move(vs);
    return o;
}

Json to_json(const RaySlice& r) {
    Json o;
    Json ms = Json::array();
    for (const MiniWall& m : r.miniwalls) {
        Json e;
        e["t_sq"] = to_string(m.t_sq);
        e["C"] = to_string(m.C);
        e["Rsq"] = to_string(m.Rsq);
        Json wits = Json::array();
        for (const WitnessClass& w : m.witnesses) wits.push_back(to_json(w));
        e["witnesses"] = std::move(wits);
        ms.push_back(std::move(e));
    }
    o["miniwalls"] = std::move(ms);
    Json ls = Json::array();
    for (const VerticalLineEntry& e : r.lines_at_s0) {
        Json c;
        c["s"] = to_string(e.s);
        ls.push_back(std::move(c));
    }
    o["lines_at_s0"] = std::move(ls);
    return o;
}

Json to_json(const FinitenessProbe& p) {
    Json o;
    o["globally_finite_hint"] = p.globally_finite_hint;
    if (p.critical_ray) o["critical_ray"] = to_string(*p.critical_ray);
    return o;
}

Scenario parse_scenario(const Json& j) {
    Scenario sc;
    sc.name = j.value("name", std::string{});

    const Json& sj = j.at("surface");
    int rho = static_cast<int>(jint(sj.at("picard_rank"), "picard_rank").convert_to<long long>());
    std::vector<std::vector<Int>> gram;
    for (const Json& row : sj.at("gram")) {
        std::vector<Int> r;
        for (const Json& e : row) r.push_back(jint(e, "gram"));
        gram.push_back(std::move(r));
    }
    LatticeVec omega = jvec(sj.at("omega"), "omega");
    LatticeVec gamma;
    if (sj.contains("gamma")) gamma = jvec(sj.at("gamma"), "gamma");
    Rat gtilde = sj.contains("gtilde") ? jrat(sj.at("gtilde"), "gtilde") : Rat(1);
    sc.surface = SurfaceGeom::make(rho, std::move(gram), std::move(omega), std::move(gamma), gtilde);

    const Json& cj = j.at("character");
    bool strict = cj.value("strict", true);
    Int rank = jint(cj.at("rank"), "rank");
    Rat ch2 = jrat(cj.at("ch2"), "ch2");
    if (cj.contains("c1")) {
        sc.character = char_from_lattice(sc.surface, rank, jvec(cj.at("c1"), "c1"), ch2, strict);
    } else {
        Rat y1 = jrat(cj.at("y1"), "y1");
        Rat y2 = cj.contains("y2") ? jrat(cj.at("y2"), "y2") : Rat(0);
        Rat a2 = cj.contains("alpha_sq") ? jrat(cj.at("alpha_sq"), "alpha_sq") : Rat(0);
        sc.character = char_from_components(sc.surface, rank, y1, y2, a2, ch2, strict);
    }

    if (j.contains("slice") && j.at("slice").contains("u")) {
        const Json& uj = j.at("slice").at("u");
        if (uj.is_array())
            for (const Json& e : uj) sc.slice_u.push_back(jrat(e, "u"));
        else
            sc.slice_u.push_back(jrat(uj, "u"));
    }
    if (sc.slice_u.empty()) sc.slice_u.push_back(Rat(0));

    if (j.contains("filters")) {
        const Json& fj = j.at("filters");
        sc.filters.require_bogomolov_sub = fj.value("require_bogomolov_sub", true);
        sc.filters.require_bogomolov_quotient = fj.value("require_bogomolov_quotient", true);
        sc.filters.require_heart_condition = fj.value("require_heart_condition", true);
        sc.filters.require_integrality = fj.value("require_integrality", true);
        if (fj.contains("rank_max")) sc.filters.rank_max = jint(fj.at("rank_max"), "rank_max");
        if (fj.contains("radius_sq_min"))
            sc.filters.radius_sq_min = jrat(fj.at("radius_sq_min"), "radius_sq_min");
        if (fj.contains("alpha_sq_set")) {
            sc.filters.alpha_sq_set.clear();
            for (const Json& e : fj.at("alpha_sq_set"))
                sc.filters.alpha_sq_set.push_back(jrat(e, "alpha_sq_set"));
        }
        sc.filters.threads = fj.value("threads", 1);
    }

    sc.expected = j.value("expected", Json::object());
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_scenario(j);
}

Json scenario_to_json(const Scenario& sc) {
    Json o;
    o["name"] = sc.name;
    o["surface"] = to_json(sc.surface);
    o["character"] = to_json(sc.character);
    Json us = Json::array();
    for (const Rat& u : sc.slice_u) us.push_back(to_string(u));
    o["slice"] = Json{{"u", std::move(us)}};
    o["filters"] = to_json(sc.filters);
    if (!sc.expected.empty()) o["expected"] = sc.expected;
    return o;
}

std::vector<std::string> check_expectations(const Scenario& sc, const WallSet& ws) {
    std::vector<std::string> bad;
    const Json& e = sc.expected;
    if (e.is_null() || e.empty()) return bad;

    auto expect_rat = [&](const char* key, const std::optional<Rat>& got) {
        if (!e.contains(key)) return;
        Rat want = jrat(e.at(key), key);
        if (!got)
            bad.push_back(std::string(key) + ": expected " + to_string(want) + ", none computed");
        else if (want != *got)
            bad.push_back(std::string(key) + ": expected " + to_string(want) + ", got " +
                          to_string(*got));
    };
    auto expect_int = [&](const char* key, const std::optional<Int>& got) {
        if (!e.contains(key)) return;
        Int want = jint(e.at(key), key);
        if (!got)
            bad.push_back(std::string(key) + ": expected " + to_string(want) + ", none computed");
        else if (want != *got)
            bad.push_back(std::string(key) + ": expected " + to_string(want) + ", got " +
                          to_string(*got));
    };
    auto expect_bool = [&](const char* key, bool got) {
        if (!e.contains(key)) return;
        bool want = e.at(key).get<bool>();
        if (want != got)
            bad.push_back(std::string(key) + ": expected " + (want ? "true" : "false") + ", got " +
                          (got ? "true" : "false"));
    };

    const BoundsReport& r = ws.report;
    expect_rat("F", r.F);
    expect_rat("xi", r.xi);
    expect_rat("C_lower", r.C_lower);
    expect_rat("R0", r.R0);
    expect_rat("s_min", r.s_min);
    expect_rat("s_max", r.s_max);
    expect_rat("rank0_radius_bound", r.rank0_radius_bound);
    expect_rat("rank0_center", r.rank0_center);
    expect_int("p", r.p);
    expect_int("m", r.mn ? std::optional<Int>(r.mn->m) : std::nullopt);
    expect_int("n", r.mn ? std::optional<Int>(r.mn->n) : std::nullopt);

    if (e.contains("C0")) {
        Surd want = e.at("C0").is_object()
                        ? Surd(jrat(e.at("C0").at("a"), "C0.a"), jrat(e.at("C0").at("b"), "C0.b"),
                               jrat(e.at("C0").at("c"), "C0.c"))
                        : Surd(jrat(e.at("C0"), "C0"));
        if (!r.C0 || cmp_surd(want, *r.C0) != 0)
            bad.push_back("C0: expected " + to_string(want) +
                          (r.C0 ? ", got " + to_string(*r.C0) : ", none computed"));
    }

    if (e.contains("critical_ray") || e.contains("globally_finite")) {
        if (sc.character.x > 0) {
            FinitenessProbe pr = finiteness_probe(sc.surface, sc.character, sc.slice_u.front());
            expect_bool("globally_finite", pr.globally_finite_hint);
            expect_rat("critical_ray", pr.critical_ray);
        } else {
            bad.push_back("critical_ray/globally_finite: undefined for a rank-0 class");
        }
    }

    expect_bool("no_walls", ws.circles.empty());
    if (e.contains("nested")) expect_bool("nested", verify_nesting(ws).nested);
    if (e.contains("num_circles")) {
        Int want = jint(e.at("num_circles"), "num_circles");
        if (want != Int(ws.circles.size()))
            bad.push_back("num_circles: expected " + to_string(want) + ", got " +
                          std::to_string(ws.circles.size()));
    }

    auto circle_at = [&](const Json& cj) {
        return std::pair<Rat, Rat>{jrat(cj.at("C"), "C"), jrat(cj.at("Rsq"), "Rsq")};
    };
    if (e.contains("circles")) {
        const Json& arr = e.at("circles");
        if (arr.size() != ws.circles.size()) {
            bad.push_back("circles: expected " + std::to_string(arr.size()) + " circles, got " +
                          std::to_string(ws.circles.size()));
        } else {
            for (std::size_t i = 0; i < ws.circles.size(); ++i) {
                auto [C, Rsq] = circle_at(arr[i]);
                if (C != ws.circles[i].C || Rsq != ws.circles[i].Rsq)
                    bad.push_back("circles[" + std::to_string(i) + "]: expected (" + to_string(C) +
                                  ", " + to_string(Rsq) + "), got (" + to_string(ws.circles[i].C) +
                                  ", " + to_string(ws.circles[i].Rsq) + ")");
            }
        }
    }
    if (e.contains("contains_circles")) {
        for (const Json& cj : e.at("contains_circles")) {
            auto [C, Rsq] = circle_at(cj);
            bool found = false;
            for (const WallCircleEntry& we : ws.circles)
                found = found || (we.C == C && we.Rsq == Rsq);
            if (!found)
                bad.push_back("contains_circles: (" + to_string(C) + ", " + to_string(Rsq) +
                              ") not found");
        }
    }
    return bad;
}

}  // namespace walls
