#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "walls/json_io.hpp"
#include "walls/svg.hpp"

#include <filesystem>
#include <string>
#include <vector>

using namespace walls;
using namespace testutil;

namespace {

std::string scen_path(const std::string& name) {
    return std::string(SCENARIO_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("every bundled scenario loads and meets its expectations") {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(SCENARIO_DIR)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        Scenario sc = load_scenario(entry.path().string());
        WallSet ws = enumerate_walls(sc.surface, sc.character, sc.slice_u.front(), sc.filters);
        auto bad = check_expectations(sc, ws);
        INFO(entry.path().filename().string() << ": "
                                              << (bad.empty() ? "" : bad.front()));
        CHECK(bad.empty());
    }
    CHECK(count >= 9);
}

TEST_CASE("scenario JSON round-trip") {
    Scenario sc = load_scenario(scen_path("product_k4.json"));
    Json j = scenario_to_json(sc);
    Scenario rt = parse_scenario(j);
    CHECK(rt.name == sc.name);
    CHECK(rt.surface.picard_rank == sc.surface.picard_rank);
    CHECK(rt.surface.g == sc.surface.g);
    CHECK(rt.surface.d == sc.surface.d);
    CHECK(rt.surface.gtilde == sc.surface.gtilde);
    CHECK(rt.character.x == sc.character.x);
    CHECK(rt.character.y1 == sc.character.y1);
    CHECK(rt.character.y2 == sc.character.y2);
    CHECK(rt.character.z == sc.character.z);
    CHECK(rt.slice_u == sc.slice_u);
    CHECK(rt.filters.rank_max == sc.filters.rank_max);
    CHECK(rt.filters.radius_sq_min == sc.filters.radius_sq_min);
    CHECK(rt.filters.threads == sc.filters.threads);
    CHECK(rt.expected == sc.expected);
}

TEST_CASE("rationals cross the JSON boundary as strings") {
    CHECK(to_json(Rat(-7, 3)) == Json("-7/3"));
    CHECK(to_json(Rat(4)) == Json("4"));
    Json s = to_json(surd_sqrt(Rat(2)));
    CHECK(s.at("a") == "0");
    CHECK(s.at("b") == "1");
    CHECK(s.at("c") == "2");
    CHECK(s.at("decimal") == "1.41421356237");
}

TEST_CASE("scenario parsing accepts integers and fraction strings") {
    Json j = {
        {"name", "inline"},
        {"surface",
         {{"picard_rank", 1}, {"gram", {{2}}}, {"omega", {"1"}}, {"gtilde", 2}}},
        {"character", {{"rank", 1}, {"c1", {2}}, {"ch2", "0"}}},
        {"slice", {{"u", 0}}},
        {"filters", {{"rank_max", 20}, {"radius_sq_min", "1/100"}}},
    };
    Scenario sc = parse_scenario(j);
    CHECK(sc.character.y1 == 2);
    CHECK(sc.filters.radius_sq_min == Rat(1, 100));
    CHECK(sc.slice_u == std::vector<Rat>{Rat(0)});
}

TEST_CASE("scenario parsing rejects malformed input") {
    Json base = {
        {"name", "bad"},
        {"surface",
         {{"picard_rank", 1}, {"gram", {{2}}}, {"omega", {"1"}}, {"gtilde", 2}}},
        {"character", {{"rank", 1}, {"c1", {2}}, {"ch2", "0"}}},
        {"slice", {{"u", 0}}},
    };
    Json bad_rat = base;
    bad_rat["character"]["ch2"] = "1/0";
    CHECK_THROWS_AS(parse_scenario(bad_rat), ParseError);
    Json bad_char = base;
    bad_char["character"]["rank"] = -1;
    CHECK_THROWS_AS(parse_scenario(bad_char), Error);
    Json bad_surface = base;
    bad_surface["surface"]["gtilde"] = 3;
    CHECK_THROWS_AS(parse_scenario(bad_surface), Error);
    CHECK_THROWS_AS(load_scenario(scen_path("does_not_exist.json")), Error);
}

TEST_CASE("expectation mismatches are reported with context") {
    Scenario sc = load_scenario(scen_path("ppas_k4.json"));
    WallSet ws = enumerate_walls(sc.surface, sc.character, sc.slice_u.front(), sc.filters);
    sc.expected["F"] = "5";
    auto bad = check_expectations(sc, ws);
    REQUIRE(bad.size() == 1);
    CHECK(bad.front().find("F") != std::string::npos);
    sc.expected["F"] = "4";
    sc.expected["no_walls"] = true;
    auto bad2 = check_expectations(sc, ws);
    CHECK(bad2.size() == 1);
}

TEST_CASE("wall set JSON shape") {
    SurfaceGeom P = make_ppas();
    EnumFilters f;
    f.rank_max = Int(20);
    f.radius_sq_min = Rat(1, 100);
    WallSet ws = enumerate_walls(P, ppas_char(P, 1, 2, 0), Rat(0), f);
    Json j = to_json(ws);
    REQUIRE(j.at("circles").size() == 1);
    CHECK(j["circles"][0]["C"] == "-1/2");
    CHECK(j["circles"][0]["Rsq"] == "9/4");
    CHECK(j["circles"][0]["witnesses"].size() == 2);
    CHECK(j.contains("bounds"));
    CHECK(j.contains("near_miss_total"));
}

TEST_CASE("SVG output is deterministic and well-formed") {
    SurfaceGeom P = make_ppas();
    CharVector v = ppas_char(P, 1, 2, 0);
    EnumFilters f;
    f.rank_max = Int(20);
    f.radius_sq_min = Rat(1, 100);
    std::vector<PlotFamily> fams = {{Rat(0), enumerate_walls(P, v, Rat(0), f)}};
    PlotSpec spec;
    std::string a = emit_svg(P, v, fams, spec);
    std::string b = emit_svg(P, v, fams, spec);
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("<path") != std::string::npos);   // the wall arc
    CHECK(a.find("C0") != std::string::npos);      // critical abscissa marker
    CHECK(a.find("y1/x") != std::string::npos);    // slope marker
}

TEST_CASE("SVG without walls still draws the frame") {
    SurfaceGeom P = make_ppas();
    CharVector v = ppas_char(P, 1, 1, 1);  // no walls
    EnumFilters f;
    f.rank_max = Int(20);
    f.radius_sq_min = Rat(1, 100);
    std::vector<PlotFamily> fams = {{Rat(0), enumerate_walls(P, v, Rat(0), f)}};
    std::string svg = emit_svg(P, v, fams, PlotSpec{});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path") == std::string::npos);
}

TEST_CASE("multi-slice overlay and parabola trace") {
    SurfaceGeom Q = make_product();
    CharVector v = product_char(Q, 1, 1, 1, -3);
    EnumFilters f;
    f.rank_max = Int(8);
    f.radius_sq_min = Rat(1, 100);
    std::vector<PlotFamily> fams;
    for (Rat u : {Rat(0), Rat(1, 4), Rat(1, 2)})
        fams.push_back({u, enumerate_walls(Q, v, u, f)});
    std::string overlay = emit_svg(Q, v, fams, PlotSpec{});
    // one colour per slice
    CHECK(overlay.find("#1f77b4") != std::string::npos);
    CHECK(overlay.find("#d62728") != std::string::npos);
    CHECK(overlay.find("#2ca02c") != std::string::npos);
    PlotSpec para;
    para.parabola_mode = true;
    std::string trace = emit_svg(Q, v, fams, para);
    CHECK(trace.find("<polyline") != std::string::npos);
    CHECK(trace.find("<circle") != std::string::npos);
}
