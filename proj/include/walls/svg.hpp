#pragma once

#include "walls/enumerate.hpp"

#include <string>
#include <vector>

namespace walls {

// One enumerated slice, drawn as a family of arcs sharing stroke styling.
struct PlotFamily {
    Rat u;
    WallSet ws;
};

struct PlotSpec {
    Rat s_lo = 0, s_hi = 0;  // equal values = auto-fit to content
    Rat t_max = 0;           // 0 = auto from the largest radius
    int width = 800;
    int height = 420;
    bool show_c0 = true;
    bool show_mu_line = true;  // s = y1/x
    bool parabola_mode = false;  // (s, u) trace of centres/endpoints instead of arcs
};

// Deterministic SVG 1.1 document: exact values are rendered as plain
// decimals (12 significant digits) only at this final step.
std::string emit_svg(const SurfaceGeom& s, const CharVector& v,
                     const std::vector<PlotFamily>& families, const PlotSpec& spec);

}  // namespace walls
