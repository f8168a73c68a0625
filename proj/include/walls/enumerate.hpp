#pragma once

#include "walls/bounds.hpp"
#include "walls/circle_classify.hpp"
#include "walls/surface.hpp"
#include "walls/wall_geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace walls {

// Candidate filters. The Bogomolov and heart switches change which witnesses
// are admitted; rank_max / radius_sq_min are termination cutoffs and at least
// one must be present.
struct EnumFilters {
    bool require_bogomolov_sub = true;
    bool require_bogomolov_quotient = true;
    bool require_heart_condition = true;
    bool require_integrality = true;
    std::optional<Int> rank_max;
    std::optional<Rat> radius_sq_min;
    // alpha'^2 values scanned for witnesses when the lattice has an extra
    // negative-definite direction; ignored (forced to {0}) otherwise.
    std::vector<Rat> alpha_sq_set = {Rat(0)};
    int threads = 1;
};

// Outcome of every check, recorded even for the disabled ones.
struct WitnessFlags {
    bool heart = false;
    bool bogomolov_sub = false;
    bool bogomolov_quotient = false;
    bool integrality = false;

    bool passes(const EnumFilters& f) const {
        return (!f.require_heart_condition || heart) && (!f.require_bogomolov_sub || bogomolov_sub) &&
               (!f.require_bogomolov_quotient || bogomolov_quotient) &&
               (!f.require_integrality || integrality);
    }
};

struct WitnessClass {
    CharVector w;
    WitnessFlags flags;
};

struct WallCircleEntry {
    Rat C;
    Rat Rsq;
    std::vector<WitnessClass> witnesses;
};

struct VerticalLineEntry {
    Rat s;
    std::vector<WitnessClass> witnesses;
};

// Candidate that failed an enabled filter; kept (capped) for diagnostics.
struct NearMiss {
    CharVector w;
    Rat C;
    Rat Rsq;
    WitnessFlags flags;
};

struct WallSet {
    std::vector<WallCircleEntry> circles;  // sorted by (C, Rsq), deduplicated
    std::vector<VerticalLineEntry> vertical_lines;
    BoundsReport report;
    std::vector<NearMiss> near_misses;  // first few only
    Int near_miss_total = 0;
};

// Exhaustive enumeration of integral wall witnesses for (v, u) under the
// given filters. Throws NonTerminatingError when the filters cannot bound
// the search, InvalidCharacterError when v is malformed or non-Bogomolov.
WallSet enumerate_walls(const SurfaceGeom& s, const CharVector& v, const Rat& u,
                        const EnumFilters& filters);

struct NestingViolation {
    std::size_t i, j;  // indices into ws.circles
    CircleRelation relation;
};

struct NestingReport {
    bool nested = true;
    std::vector<NestingViolation> violations;
};

// All circle pairs must classify as Equal or Nested.
NestingReport verify_nesting(const WallSet& ws);

struct MiniWall {
    Rat t_sq;  // height of the intersection with the ray s = s0
    Rat C;
    Rat Rsq;
    std::vector<WitnessClass> witnesses;
};

struct RaySlice {
    std::vector<MiniWall> miniwalls;  // sorted by t_sq descending
    std::vector<VerticalLineEntry> lines_at_s0;
};

RaySlice miniwalls_on_ray(const WallSet& ws, const Rat& s0);

}  // namespace walls
