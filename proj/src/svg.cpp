#include "arccover/svg.hpp"

#include "arccover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace arccover {

namespace {

constexpr double kTwoPi = 2 * M_PI;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    // trim trailing zeros for stable, compact output
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

struct Mapper {
    double scale = 1, ox = 0, oy = 0, height = 0;
    Vec2 operator()(Vec2 p) const { return {(p.x - ox) * scale, height - (p.y - oy) * scale}; }
};

struct PiecewiseArc {
    int support;
    double start;
    double delta;
    bool full;
};

} // namespace

std::string svg_export(const Drawing& d, const SvgOptions& opts) {
    if (d.dim != 2)
        throw validation_error("svg_export supports 2D drawings only; 3D exports as JSON");

    // bounding box over vertices, arc samples and (optionally) supports
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    bool seen = false;
    auto grow = [&](Vec2 p) {
        if (!seen) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            seen = true;
        } else {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    };
    for (size_t v = 0; v < d.vertices.size(); ++v) grow(d.vertex2(static_cast<int>(v)));
    for (const Arc& a : d.arcs)
        for (int s = 0; s <= 16; ++s) {
            Vec3 p = d.arc_point(a, s / 16.0);
            grow({p.x, p.y});
        }
    if (opts.show_supports)
        for (const Support& s : d.supports)
            if (s.kind == Support::Kind::circle) {
                grow(s.flat.center + Vec2{s.flat.radius, s.flat.radius});
                grow(s.flat.center - Vec2{s.flat.radius, s.flat.radius});
            }

    double span_x = std::max(max_x - min_x, 1e-9);
    double span_y = std::max(max_y - min_y, 1e-9);
    double inner_w = opts.width - 2 * opts.margin;
    double scale = inner_w / span_x;
    double height = span_y * scale + 2 * opts.margin;
    Mapper map{scale, min_x - opts.margin / scale, min_y - opts.margin / scale, height};

    // optionally merge contiguous arcs on a shared circle into maximal arcs
    std::vector<PiecewiseArc> pieces;
    if (opts.merge_arcs) {
        std::vector<char> taken(d.arcs.size(), 0);
        for (size_t i = 0; i < d.arcs.size(); ++i) {
            if (taken[i]) continue;
            const Arc& a = d.arcs[i];
            if (d.supports[a.support].kind != Support::Kind::circle || a.full) {
                taken[i] = 1;
                pieces.push_back({a.support, a.start, a.delta, a.full});
                continue;
            }
            // normalize to ccw and greedily extend both ends
            double lo = a.delta >= 0 ? a.start : a.start + a.delta;
            double len = std::fabs(a.delta);
            taken[i] = 1;
            bool extended = true;
            while (extended && len < kTwoPi - 1e-9) {
                extended = false;
                for (size_t j = 0; j < d.arcs.size(); ++j) {
                    if (taken[j]) continue;
                    const Arc& b = d.arcs[j];
                    if (b.support != a.support || b.full) continue;
                    double blo = b.delta >= 0 ? b.start : b.start + b.delta;
                    double blen = std::fabs(b.delta);
                    double wrap = std::remainder(blo - (lo + len), kTwoPi);
                    if (std::fabs(wrap) < 1e-9) { // b continues at our end
                        len = std::min(len + blen, kTwoPi);
                        taken[j] = 1;
                        extended = true;
                        continue;
                    }
                    wrap = std::remainder(blo + blen - lo, kTwoPi);
                    if (std::fabs(wrap) < 1e-9) { // b ends at our start
                        lo = blo;
                        len = std::min(len + blen, kTwoPi);
                        taken[j] = 1;
                        extended = true;
                    }
                }
            }
            pieces.push_back({a.support, lo, len, len >= kTwoPi - 1e-9});
        }
    } else {
        for (const Arc& a : d.arcs) pieces.push_back({a.support, a.start, a.delta, a.full});
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(opts.width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(opts.width) << " "
        << fmt(height) << "\">\n";

    if (opts.show_supports) {
        for (const Support& s : d.supports) {
            if (s.kind == Support::Kind::circle) {
                Vec2 c = map(s.flat.center);
                out << "  <circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\""
                    << fmt(s.flat.radius * scale) << "\" fill=\"none\" stroke=\""
                    << opts.guide_stroke << "\" stroke-dasharray=\"4 3\"/>\n";
            } else if (s.kind == Support::Kind::line) {
                // clip a long guide segment to the canvas neighborhood
                Vec2 a = map(s.flat.eval(-4 * span_x - 4 * span_y));
                Vec2 b = map(s.flat.eval(4 * span_x + 4 * span_y));
                out << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
                    << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\" stroke=\"" << opts.guide_stroke
                    << "\" stroke-dasharray=\"4 3\"/>\n";
            }
        }
    }

    for (const PiecewiseArc& pa : pieces) {
        const Support& s = d.supports[pa.support];
        if (s.kind == Support::Kind::line) {
            Vec2 a = map(s.flat.eval(pa.start));
            Vec2 b = map(s.flat.eval(pa.start + pa.delta));
            out << "  <path d=\"M " << fmt(a.x) << " " << fmt(a.y) << " L " << fmt(b.x) << " "
                << fmt(b.y) << "\" fill=\"none\" stroke=\"" << opts.stroke << "\"/>\n";
            continue;
        }
        double r = s.flat.radius * scale;
        if (pa.full) {
            Vec2 c = map(s.flat.center);
            out << "  <circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(r)
                << "\" fill=\"none\" stroke=\"" << opts.stroke << "\"/>\n";
            continue;
        }
        // split sweeps over pi into two SVG arc segments for robustness
        double remaining = pa.delta;
        double at = pa.start;
        Vec2 from = map(s.flat.eval(at));
        out << "  <path d=\"M " << fmt(from.x) << " " << fmt(from.y);
        while (std::fabs(remaining) > 1e-12) {
            double step = std::clamp(remaining, -M_PI + 1e-9, M_PI - 1e-9);
            if (std::fabs(remaining) <= M_PI) step = remaining;
            at += step;
            remaining -= step;
            Vec2 to = map(s.flat.eval(at));
            // svg y-axis points down, so ccw sweeps render with flag 0
            int sweep_flag = step >= 0 ? 0 : 1;
            out << " A " << fmt(r) << " " << fmt(r) << " 0 0 " << sweep_flag << " " << fmt(to.x)
                << " " << fmt(to.y);
        }
        out << "\" fill=\"none\" stroke=\"" << opts.stroke << "\"/>\n";
    }

    if (opts.show_vertices)
        for (size_t v = 0; v < d.vertices.size(); ++v) {
            Vec2 p = map(d.vertex2(static_cast<int>(v)));
            out << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
                << "\" r=\"3\" fill=\"" << opts.stroke << "\"/>\n";
        }

    out << "</svg>\n";
    return out.str();
}

} // namespace arccover
