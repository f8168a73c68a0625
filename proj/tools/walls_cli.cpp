#include "walls/enumerate.hpp"
#include "walls/errors.hpp"
#include "walls/json_io.hpp"
#include "walls/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace walls;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// "r,c1a:c1b,ch2" with rational entries; c1 holds the lattice coordinates.
CharVector parse_witness(const SurfaceGeom& S, const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 3)
        throw ParseError("witness must be r,c1,ch2 (c1 coordinates separated by ':')");
    Rat rank = parse_rat(parts[0]);
    if (!is_integer(rank)) throw ParseError("witness rank must be an integer");
    LatticeVec c1;
    for (const std::string& c : split(parts[1], ':')) c1.push_back(parse_rat(c));
    return char_from_lattice(S, num(rank), c1, parse_rat(parts[2]), /*strict=*/false);
}

void print_table_bounds(const BoundsReport& r, const Rat& u) {
    std::cout << "u        = " << to_string(u) << "\n";
    if (r.rank0_radius_bound) {
        std::cout << "center   = " << to_string(*r.rank0_center) << "\n"
                  << "R_bound  = " << to_string(*r.rank0_radius_bound) << "\n";
        return;
    }
    if (r.F) std::cout << "F        = " << to_string(*r.F) << "\n";
    if (r.C0) std::cout << "C0       = " << to_string(*r.C0) << " (" << decimal(*r.C0) << ")\n";
    if (r.F_zero_no_walls) {
        std::cout << "F = 0: no walls\n";
        return;
    }
    if (r.p) std::cout << "p        = " << to_string(*r.p) << "  xi = " << to_string(*r.xi) << "\n";
    if (r.mn)
        std::cout << "(m, n)   = (" << to_string(r.mn->m) << ", " << to_string(r.mn->n) << ")\n";
    if (r.C_lower)
        std::cout << "C_lower  = " << to_string(*r.C_lower) << "\n"
                  << "R0       = " << to_string(*r.R0) << "\n"
                  << "s range  = [" << to_string(*r.s_min) << ", " << to_string(*r.s_max) << ")\n"
                  << "formula  = " << r.formula << "\n";
}

void print_table_wallset(const WallSet& ws) {
    std::cout << ws.circles.size() << " circle(s), " << ws.vertical_lines.size()
              << " vertical line(s)\n";
    for (const WallCircleEntry& e : ws.circles) {
        std::cout << "  C = " << to_string(e.C) << "  Rsq = " << to_string(e.Rsq) << "  ("
                  << decimal(e.C) << ", R = " << sqrt_decimal(e.Rsq) << ")  witnesses:";
        for (const WitnessClass& w : e.witnesses)
            std::cout << " (" << to_string(w.w.x) << "," << to_string(w.w.y1) << ","
                      << to_string(w.w.y2) << "," << to_string(w.w.z) << ")";
        std::cout << "\n";
    }
    for (const VerticalLineEntry& e : ws.vertical_lines)
        std::cout << "  vertical line s = " << to_string(e.s) << "\n";
}

int report_expectations(const Scenario& sc, const WallSet& ws) {
    auto bad = check_expectations(sc, ws);
    if (bad.empty()) return 0;
    for (const std::string& line : bad) std::cerr << sc.name << ": " << line << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall computations for stability conditions on surfaces"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

    std::string path, witness_text, s0_text, out_path = "walls.svg", dir = "scenarios";
    bool parabola = false;

    auto* cmd_bounds = app.add_subcommand("bounds", "envelope bounds for a scenario");
    cmd_bounds->add_option("scenario", path)->required();
    auto* cmd_wall = app.add_subcommand("wall", "wall locus of one witness");
    cmd_wall->add_option("scenario", path)->required();
    cmd_wall->add_option("--witness", witness_text, "r,c1,ch2 (c1 coordinates ':'-separated)")
        ->required();
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate integral walls");
    cmd_enum->add_option("scenario", path)->required();
    auto* cmd_nest = app.add_subcommand("nesting", "enumerate and verify nesting");
    cmd_nest->add_option("scenario", path)->required();
    auto* cmd_ray = app.add_subcommand("ray", "mini-walls on a vertical ray");
    cmd_ray->add_option("scenario", path)->required();
    cmd_ray->add_option("--s", s0_text, "abscissa of the ray, p/q")->required();
    auto* cmd_plot = app.add_subcommand("plot", "emit an SVG of the wall set");
    cmd_plot->add_option("scenario", path)->required();
    cmd_plot->add_option("--out", out_path, "output file");
    cmd_plot->add_flag("--parabola", parabola, "(s,u) trace instead of arcs");
    auto* cmd_scen = app.add_subcommand("scenario", "fixture operations");
    auto* cmd_runall = cmd_scen->add_subcommand("run-all", "run every fixture's expectations");
    cmd_runall->add_option("dir", dir, "directory of scenario JSON files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_runall->parsed()) {
            int rc = 0;
            std::vector<std::filesystem::path> files;
            for (const auto& e : std::filesystem::directory_iterator(dir))
                if (e.path().extension() == ".json") files.push_back(e.path());
            std::sort(files.begin(), files.end());
            if (files.empty()) {
                std::cerr << "no scenario files in " << dir << "\n";
                return 2;
            }
            for (const auto& f : files) {
                Scenario sc = load_scenario(f.string());
                WallSet ws =
                    enumerate_walls(sc.surface, sc.character, sc.slice_u.front(), sc.filters);
                int one = report_expectations(sc, ws);
                std::cout << (one == 0 ? "PASS " : "FAIL ") << f.filename().string() << "\n";
                rc = std::max(rc, one);
            }
            return rc;
        }

        Scenario sc = load_scenario(path);

        if (cmd_bounds->parsed()) {
            Json out = Json::array();
            for (const Rat& u : sc.slice_u) {
                BoundsReport r = bounds_report(sc.surface, sc.character, u);
                if (format == "table")
                    print_table_bounds(r, u);
                else {
                    Json e = to_json(r);
                    e["u"] = to_string(u);
                    out.push_back(std::move(e));
                }
            }
            if (format == "json") std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_wall->parsed()) {
            CharVector w = parse_witness(sc.surface, witness_text);
            Json out = Json::array();
            for (const Rat& u : sc.slice_u) {
                WallLocus l = wall_circle(sc.surface, sc.character, w, u);
                if (format == "table")
                    std::cout << "u = " << to_string(u) << ": " << to_json(l).dump() << "\n";
                else {
                    Json e = to_json(l);
                    e["u"] = to_string(u);
                    out.push_back(std::move(e));
                }
            }
            if (format == "json") std::cout << out.dump(2) << "\n";
            return 0;
        }

        // remaining commands enumerate first
        std::vector<PlotFamily> fams;
        for (const Rat& u : sc.slice_u)
            fams.push_back({u, enumerate_walls(sc.surface, sc.character, u, sc.filters)});
        const WallSet& first = fams.front().ws;

        if (cmd_enum->parsed()) {
            if (format == "table") {
                for (const PlotFamily& f : fams) {
                    std::cout << "u = " << to_string(f.u) << ":\n";
                    print_table_wallset(f.ws);
                }
            } else {
                Json out = Json::array();
                for (const PlotFamily& f : fams) {
                    Json e = to_json(f.ws);
                    e["u"] = to_string(f.u);
                    out.push_back(std::move(e));
                }
                std::cout << out.dump(2) << "\n";
            }
            return report_expectations(sc, first);
        }
        if (cmd_nest->parsed()) {
            int rc = 0;
            for (const PlotFamily& f : fams) {
                NestingReport r = verify_nesting(f.ws);
                if (format == "table")
                    std::cout << "u = " << to_string(f.u) << ": "
                              << (r.nested ? "nested" : "NOT nested") << "\n";
                else
                    std::cout << to_json(r).dump(2) << "\n";
                if (!r.nested) rc = 1;
            }
            return rc;
        }
        if (cmd_ray->parsed()) {
            Rat s0 = parse_rat(s0_text);
            for (const PlotFamily& f : fams) {
                RaySlice r = miniwalls_on_ray(f.ws, s0);
                if (format == "table") {
                    std::cout << "u = " << to_string(f.u) << ": " << r.miniwalls.size()
                              << " mini-wall(s)\n";
                    for (const MiniWall& m : r.miniwalls)
                        std::cout << "  t^2 = " << to_string(m.t_sq) << " on circle ("
                                  << to_string(m.C) << ", " << to_string(m.Rsq) << ")\n";
                } else {
                    std::cout << to_json(r).dump(2) << "\n";
                }
            }
            return 0;
        }
        if (cmd_plot->parsed()) {
            PlotSpec ps;
            ps.parabola_mode = parabola;
            std::string svg = emit_svg(sc.surface, sc.character, fams, ps);
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
            out << svg;
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
    } catch (const walls::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
