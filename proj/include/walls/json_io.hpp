#pragma once

#include "walls/bounds.hpp"
#include "walls/enumerate.hpp"
#include "walls/surface.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace walls {

using Json = nlohmann::json;

// All exact numbers cross the JSON boundary as "p/q" strings (plain integers
// are also accepted on input).
struct Scenario {
    std::string name;
    SurfaceGeom surface;
    CharVector character;
    std::vector<Rat> slice_u;  // at least one entry
    EnumFilters filters;
    Json expected;  // optional expectations block, kept verbatim
};

Scenario parse_scenario(const Json& j);
Scenario load_scenario(const std::string& path);
Json scenario_to_json(const Scenario& sc);

Json to_json(const Rat& q);
Json to_json(const Surd& s);
Json to_json(const SurfaceGeom& s);
Json to_json(const CharVector& v);
Json to_json(const EnumFilters& f);
Json to_json(const WitnessClass& w);
Json to_json(const BoundsReport& r);
Json to_json(const WallLocus& l);
Json to_json(const WallSet& ws);
Json to_json(const NestingReport& r);
Json to_json(const RaySlice& r);
Json to_json(const FinitenessProbe& p);

// Compares the scenario's expectations against computed results at the first
// slice value; returns one human-readable line per mismatch (empty = pass).
std::vector<std::string> check_expectations(const Scenario& sc, const WallSet& ws);

}  // namespace walls
