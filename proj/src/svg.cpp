#include "walls/svg.hpp"

#include "walls/errors.hpp"
#include "walls/wall_geometry.hpp"

#include <sstream>

namespace walls {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kMargin = 40;

// Rational stand-in for an irrational value, used only for layout.
Rat approx_sqrt(const Rat& q) {
    auto [lo, hi] = sqrt_brackets(q, 15);
    return (lo + hi) / 2;
}

Rat approx(const Surd& s) {
    if (s.is_rational()) return s.a;
    return s.a + s.b * approx_sqrt(Rat(s.c));
}

std::string dec(const Rat& q) { return decimal(q, 12); }

}  // namespace

std::string emit_svg(const SurfaceGeom& S, const CharVector& v,
                     const std::vector<PlotFamily>& families, const PlotSpec& spec) {
    const int W = spec.width, H = spec.height;
    Rat mu_line = v.x > 0 ? v.y1 / Rat(v.x) : Rat(0);

    // horizontal range
    Rat s_lo = spec.s_lo, s_hi = spec.s_hi;
    if (s_lo == s_hi) {
        bool seen = false;
        auto widen = [&](const Rat& val) {
            if (!seen) {
                s_lo = s_hi = val;
                seen = true;
            } else {
                if (val < s_lo) s_lo = val;
                if (val > s_hi) s_hi = val;
            }
        };
        for (const PlotFamily& f : families) {
            for (const WallCircleEntry& e : f.ws.circles) {
                Rat R = approx_sqrt(e.Rsq);
                widen(e.C - R);
                widen(e.C + R);
            }
            for (const VerticalLineEntry& e : f.ws.vertical_lines) widen(e.s);
            if (f.ws.report.C0) widen(approx(*f.ws.report.C0));
        }
        if (v.x > 0) widen(mu_line);
        if (!seen) {
            s_lo = -1;
            s_hi = 1;
        }
        Rat pad = (s_hi - s_lo) / 10 + Rat(1, 2);
        s_lo -= pad;
        s_hi += pad;
    }

    // vertical axis: t in circle mode, u in parabola mode
    Rat t_lo = 0, t_hi = spec.t_max;
    if (spec.parabola_mode) {
        t_lo = families.empty() ? Rat(0) : families.front().u;
        t_hi = t_lo;
        for (const PlotFamily& f : families) {
            if (f.u < t_lo) t_lo = f.u;
            if (f.u > t_hi) t_hi = f.u;
        }
        Rat pad = (t_hi - t_lo) / 10 + Rat(1, 2);
        t_lo -= pad;
        t_hi += pad;
    } else if (t_hi == 0) {
        for (const PlotFamily& f : families)
            for (const WallCircleEntry& e : f.ws.circles) {
                Rat R = approx_sqrt(e.Rsq);
                if (R > t_hi) t_hi = R;
            }
        t_hi = t_hi + t_hi / 10 + Rat(1, 2);
    }

    Rat xspan = s_hi - s_lo, yspan = t_hi - t_lo;
    auto px = [&](const Rat& s) -> Rat { return kMargin + (s - s_lo) * (W - 2 * kMargin) / xspan; };
    auto py = [&](const Rat& t) -> Rat {
        return (H - kMargin) - (t - t_lo) * (H - 2 * kMargin) / yspan;
    };
    Rat xscale = Rat(W - 2 * kMargin) / xspan;
    Rat yscale = Rat(H - 2 * kMargin) / yspan;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axis t = 0 (or u = t_lo edge in parabola mode)
    out << "<line x1=\"" << kMargin << "\" y1=\"" << dec(py(t_lo)) << "\" x2=\"" << (W - kMargin)
        << "\" y2=\"" << dec(py(t_lo)) << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

    std::size_t fi = 0;
    for (const PlotFamily& f : families) {
        const char* color = kPalette[fi % 6];
        ++fi;
        if (spec.parabola_mode) {
            Rat yy = py(f.u);
            for (const WallCircleEntry& e : f.ws.circles) {
                Rat R = approx_sqrt(e.Rsq);
                out << "<circle cx=\"" << dec(px(e.C)) << "\" cy=\"" << dec(yy)
                    << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
                out << "<circle cx=\"" << dec(px(e.C - R)) << "\" cy=\"" << dec(yy)
                    << "\" r=\"1.5\" fill=\"" << color << "\"/>\n";
                out << "<circle cx=\"" << dec(px(e.C + R)) << "\" cy=\"" << dec(yy)
                    << "\" r=\"1.5\" fill=\"" << color << "\"/>\n";
            }
            continue;
        }
        for (const WallCircleEntry& e : f.ws.circles) {
            Rat R = approx_sqrt(e.Rsq);
            // upper semicircle, rendered as an elliptical arc because the two
            // pixel scales differ
            out << "<path d=\"M " << dec(px(e.C - R)) << " " << dec(py(Rat(0))) << " A "
                << dec(R * xscale) << " " << dec(R * yscale) << " 0 0 1 " << dec(px(e.C + R))
                << " " << dec(py(Rat(0))) << "\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"/>\n";
        }
        for (const VerticalLineEntry& e : f.ws.vertical_lines) {
            out << "<line x1=\"" << dec(px(e.s)) << "\" y1=\"" << dec(py(t_lo)) << "\" x2=\""
                << dec(px(e.s)) << "\" y2=\"" << kMargin << "\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"/>\n";
        }
        if (spec.show_c0 && f.ws.report.C0) {
            Rat c0 = approx(*f.ws.report.C0);
            out << "<line x1=\"" << dec(px(c0)) << "\" y1=\"" << dec(py(t_lo)) << "\" x2=\""
                << dec(px(c0)) << "\" y2=\"" << kMargin << "\" stroke=\"" << color
                << "\" stroke-width=\"1\" stroke-dasharray=\"6 3\"/>\n";
            out << "<text x=\"" << dec(px(c0) + 3) << "\" y=\"" << (kMargin + 12)
                << "\" font-size=\"11\" fill=\"" << color << "\">C0</text>\n";
        }
    }

    if (spec.parabola_mode && !families.empty() && v.x > 0 && families.front().ws.report.F_u) {
        // critical abscissa y1/x - sqrt(F(u)) sampled across the u-range
        const FQuadratic& q = *families.front().ws.report.F_u;
        std::ostringstream pts;
        bool first = true;
        for (int i = 0; i <= 64; ++i) {
            Rat uu = t_lo + Rat(i) * yspan / 64;
            Rat Fu = q.eval(uu);
            if (Fu < 0) continue;
            Rat c0 = mu_line - approx_sqrt(Fu);
            if (c0 < s_lo || c0 > s_hi) continue;
            pts << (first ? "" : " ") << dec(px(c0)) << "," << dec(py(uu));
            first = false;
        }
        if (!first)
            out << "<polyline points=\"" << pts.str()
                << "\" fill=\"none\" stroke=\"#666\" stroke-width=\"1\" "
                   "stroke-dasharray=\"4 3\"/>\n";
    }

    if (spec.show_mu_line && v.x > 0 && !spec.parabola_mode && mu_line > s_lo && mu_line < s_hi) {
        out << "<line x1=\"" << dec(px(mu_line)) << "\" y1=\"" << dec(py(t_lo)) << "\" x2=\""
            << dec(px(mu_line)) << "\" y2=\"" << kMargin
            << "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"2 3\"/>\n";
        out << "<text x=\"" << dec(px(mu_line) + 3) << "\" y=\"" << (kMargin + 26)
            << "\" font-size=\"11\" fill=\"#999\">y1/x</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace walls
