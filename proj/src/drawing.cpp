#include "arccover/drawing.hpp"

#include "arccover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace arccover {

namespace {

constexpr double kTwoPi = 2 * M_PI;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}

/// Signed sweep position of angle phi on the arc [start, start + delta];
/// returns true when phi lies inside the sweep within ang_tol.
bool angle_on_sweep(double phi, double start, double delta, double ang_tol) {
    if (std::fabs(delta) >= kTwoPi - 1e-12) return true;
    double off = delta >= 0 ? wrap_angle(phi - start) : wrap_angle(start - phi);
    double span = std::fabs(delta);
    if (off <= span + ang_tol) return true;
    return kTwoPi - off <= ang_tol; // wrap-around hit near the start point
}

} // namespace

Vec3 Drawing::arc_point(const Arc& a, double t) const {
    const Support& s = supports[a.support];
    double phi = a.full ? t * 2 * M_PI : a.start + t * a.delta;
    if (s.kind == Support::Kind::circle || s.kind == Support::Kind::line) {
        Vec2 p = s.flat.eval(phi);
        return {p.x, p.y, 0};
    }
    if (s.kind == Support::Kind::circle3) return s.space.eval(phi);
    throw validation_error("arc on a sphere support");
}

namespace {

struct SupportGeom {
    // resolved cover identity for the certified count
    static bool same_flat(const GenCircle2& a, const GenCircle2& b, double tol) {
        if (a.kind != b.kind) return false;
        if (a.kind == GenCircle2::Kind::circle)
            return dist(a.center, b.center) < tol && std::fabs(a.radius - b.radius) < tol;
        // same line: parallel and sharing a point
        return std::fabs(cross(a.dir, b.dir)) < tol && b.distance(a.point) < tol;
    }
    static bool same_space(const Circle3& a, const Circle3& b, double tol) {
        if (dist(a.center, b.center) >= tol || std::fabs(a.radius - b.radius) >= tol) return false;
        return cross(a.normal, b.normal).norm() < tol;
    }
    static bool same_sphere(const Sphere& a, const Sphere& b, double tol) {
        return dist(a.center, b.center) < tol && std::fabs(a.radius - b.radius) < tol;
    }
};

bool same_support_geometry(const Support& a, const Support& b, double tol) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Support::Kind::circle:
        case Support::Kind::line: return SupportGeom::same_flat(a.flat, b.flat, tol);
        case Support::Kind::circle3: return SupportGeom::same_space(a.space, b.space, tol);
        case Support::Kind::sphere: return SupportGeom::same_sphere(a.ball, b.ball, tol);
    }
    return false;
}

/// Angular tolerance equivalent to a metric tolerance on a given radius.
double ang_tol_for(double tol, double radius) { return tol / std::max(radius, tol); }

struct ArcChecker {
    const Drawing& d;
    double tol;

    double radius_of(const Arc& a) const {
        const Support& s = d.supports[a.support];
        if (s.kind == Support::Kind::circle) return s.flat.radius;
        if (s.kind == Support::Kind::circle3) return s.space.radius;
        return 1.0; // lines: parameter is arc length already
    }

    bool on_arc(const Arc& a, double phi) const {
        const Support& s = d.supports[a.support];
        if (s.kind == Support::Kind::line) {
            double lo = std::min(a.start, a.start + a.delta) - tol;
            double hi = std::max(a.start, a.start + a.delta) + tol;
            return phi >= lo && phi <= hi;
        }
        return angle_on_sweep(phi, a.start, a.delta, ang_tol_for(tol, radius_of(a)));
    }

    double param2(const Arc& a, Vec2 p) const { return d.supports[a.support].flat.param_of(p); }
    double param3(const Arc& a, Vec3 p) const { return d.supports[a.support].space.param_of(p); }

    bool near_vertex(Vec3 p, int v) const {
        if (v < 0) return false;
        return dist(p, d.vertex3(v)) < 8 * tol;
    }

    /// p is an allowed meeting point of arcs a and b.
    bool allowed_meeting(const Arc& a, const Arc& b, Vec3 p) const {
        for (int va : {a.u, a.v})
            for (int vb : {b.u, b.v})
                if (va >= 0 && va == vb && near_vertex(p, va)) return true;
        return false;
    }
};

} // namespace

VerificationReport verify_drawing(const Drawing& d, double tol) {
    VerificationReport report;
    auto& viol = report.violations;

    // --- structural checks: one arc per edge ---
    std::map<Edge, int> arc_of_edge;
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
        const Arc& a = d.arcs[i];
        if (a.support < 0 || a.support >= static_cast<int>(d.supports.size())) {
            viol.push_back({"missing-arc", i, -1, {}, "support index out of range"});
            continue;
        }
        if (a.full) continue;
        if (a.u < 0 || a.v < 0 || a.u >= d.graph.vertex_count() || a.v >= d.graph.vertex_count()) {
            viol.push_back({"missing-arc", i, -1, {}, "arc endpoints out of range"});
            continue;
        }
        Edge e{std::min(a.u, a.v), std::max(a.u, a.v)};
        if (!d.graph.has_edge(e.first, e.second))
            viol.push_back({"missing-arc", i, -1, {}, "arc does not match a graph edge"});
        else if (arc_of_edge.count(e))
            viol.push_back({"missing-arc", i, -1, {}, "edge drawn twice"});
        else
            arc_of_edge[e] = i;
    }
    for (const auto& e : d.graph.edges())
        if (!arc_of_edge.count(e))
            viol.push_back({"missing-arc", -1, -1, {}, "edge (" + std::to_string(e.first) + "," +
                                                           std::to_string(e.second) + ") has no arc"});

    // --- endpoint and on-support checks ---
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
        const Arc& a = d.arcs[i];
        if (a.support < 0 || a.support >= static_cast<int>(d.supports.size())) continue;
        if (a.full) continue;
        if (a.u < 0 || a.v < 0) continue;
        Vec3 p0 = d.arc_point(a, 0.0);
        Vec3 p1 = d.arc_point(a, 1.0);
        if (dist(p0, d.vertex3(a.u)) > tol)
            viol.push_back({"endpoint", i, -1, {p0.x, p0.y, p0.z},
                            "arc start misses vertex " + std::to_string(a.u)});
        if (dist(p1, d.vertex3(a.v)) > tol)
            viol.push_back({"endpoint", i, -1, {p1.x, p1.y, p1.z},
                            "arc end misses vertex " + std::to_string(a.v)});
        // interior sample stays on the support by construction of eval();
        // vertices themselves must sit on the support too
        const Support& s = d.supports[a.support];
        double off = 0;
        if (s.kind == Support::Kind::circle || s.kind == Support::Kind::line)
            off = s.flat.distance(d.vertex2(a.u));
        else if (s.kind == Support::Kind::circle3)
            off = s.space.distance(d.vertex3(a.u));
        if (off > tol)
            viol.push_back({"off-support", i, -1, {}, "vertex " + std::to_string(a.u) +
                                                          " off its support"});
    }

    ArcChecker check{d, tol};

    // --- pairwise crossing checks ---
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
        const Arc& a = d.arcs[i];
        if (a.support < 0) continue;
        for (int j = i + 1; j < static_cast<int>(d.arcs.size()); ++j) {
            const Arc& b = d.arcs[j];
            if (b.support < 0) continue;
            const Support& sa = d.supports[a.support];
            const Support& sb = d.supports[b.support];
            bool same = a.support == b.support || same_support_geometry(sa, sb, tol);

            if (same) {
                if (sa.kind == Support::Kind::line) {
                    double alo = std::min(a.start, a.start + a.delta);
                    double ahi = std::max(a.start, a.start + a.delta);
                    // express b in a's parameterization (same line, maybe
                    // opposite direction / different anchor)
                    Vec2 b0 = sb.flat.eval(b.start);
                    Vec2 b1 = sb.flat.eval(b.start + b.delta);
                    double t0 = sa.flat.param_of(b0), t1 = sa.flat.param_of(b1);
                    double blo = std::min(t0, t1), bhi = std::max(t0, t1);
                    double lo = std::max(alo, blo), hi = std::min(ahi, bhi);
                    if (hi - lo > tol) {
                        Vec2 w = sa.flat.eval((lo + hi) / 2);
                        viol.push_back({"overlap", i, j, {w.x, w.y, 0}, "collinear overlap"});
                    } else if (hi - lo > -tol) {
                        Vec2 w = sa.flat.eval((lo + hi) / 2);
                        if (!check.allowed_meeting(a, b, {w.x, w.y, 0}))
                            viol.push_back({"touch", i, j, {w.x, w.y, 0},
                                            "arcs meet at a non-vertex point"});
                    }
                } else {
                    // common circle: exact angular-interval overlap.  Express
                    // both sweeps as ccw intervals in a's parameterization.
                    double ang_tol = ang_tol_for(tol, check.radius_of(a));
                    auto ccw_interval = [&](const Arc& arc, const Support& s) {
                        double s0 = arc.start, dl = arc.delta;
                        if (arc.full) { s0 = 0; dl = kTwoPi; }
                        if (dl < 0) { s0 += dl; dl = -dl; }
                        // re-anchor to a's frame (supports may differ by index)
                        Vec3 p = s.kind == Support::Kind::circle3
                                     ? s.space.eval(s0)
                                     : Vec3{s.flat.eval(s0).x, s.flat.eval(s0).y, 0};
                        double anchored = sa.kind == Support::Kind::circle3
                                              ? check.param3(a, p)
                                              : check.param2(a, {p.x, p.y});
                        return std::pair<double, double>{anchored, dl};
                    };
                    auto [a0, la] = ccw_interval(a, sa);
                    auto [b0, lb] = ccw_interval(b, sb);
                    double shift = wrap_angle(b0 - a0);
                    double overlap = 0, center_at = 0;
                    double o1 = std::min(la, shift + lb) - shift;
                    if (shift <= la && o1 > overlap) { overlap = o1; center_at = shift + o1 / 2; }
                    if (shift + lb > kTwoPi) {
                        double o2 = std::min(la, shift + lb - kTwoPi);
                        if (o2 > overlap) { overlap = o2; center_at = o2 / 2; }
                    }
                    if (overlap > 2 * ang_tol) {
                        Vec3 w = d.arc_point(a, a.full ? center_at / kTwoPi
                                                       : (a.delta >= 0
                                                              ? center_at / std::fabs(a.delta)
                                                              : 1 - center_at / std::fabs(a.delta)));
                        viol.push_back({"overlap", i, j, {w.x, w.y, w.z},
                                        "arcs share a sub-arc of one circle"});
                    } else {
                        // interval contact: endpoints inside the other sweep
                        // must be shared vertices
                        for (double t : {0.0, 1.0}) {
                            if (a.full) break;
                            Vec3 p = d.arc_point(a, t);
                            double phi = sb.kind == Support::Kind::circle3
                                             ? check.param3(b, p)
                                             : check.param2(b, {p.x, p.y});
                            if ((b.full || check.on_arc(b, phi)) &&
                                !check.allowed_meeting(a, b, p))
                                viol.push_back({"touch", i, j, {p.x, p.y, p.z},
                                                "arcs meet at a non-vertex point"});
                        }
                    }
                }
                continue;
            }

            // distinct supports: analytic support intersection, then sweep
            // membership, touch/cross classified by the tangency test
            std::vector<Vec3> candidates;
            bool tangent = false;
            if (d.dim == 2 || (sa.kind != Support::Kind::circle3 && sb.kind != Support::Kind::circle3)) {
                auto hits = intersect(sa.flat, sb.flat, tol);
                tangent = hits.tangent;
                for (auto& p : hits.points) candidates.push_back({p.x, p.y, 0});
            } else {
                auto hits = intersect(sa.space, sb.space, tol);
                tangent = hits.tangent;
                candidates = hits.points;
            }
            for (const Vec3& p : candidates) {
                double pa = sa.kind == Support::Kind::circle3 ? check.param3(a, p)
                                                              : check.param2(a, {p.x, p.y});
                double pb = sb.kind == Support::Kind::circle3 ? check.param3(b, p)
                                                              : check.param2(b, {p.x, p.y});
                bool on_a = a.full || check.on_arc(a, pa);
                bool on_b = b.full || check.on_arc(b, pb);
                if (!on_a || !on_b) continue;
                if (check.allowed_meeting(a, b, p)) continue;
                viol.push_back({tangent ? "touch" : "cross", i, j, {p.x, p.y, p.z},
                                "arcs intersect away from a shared vertex"});
            }
        }
    }

    // --- support counting ---
    std::set<int> used;
    for (const Arc& a : d.arcs)
        if (a.support >= 0) used.insert(a.support);
    report.support_count = static_cast<int>(used.size());

    // resolve carrier spheres, then dedupe geometrically
    std::vector<Support> cover_units;
    for (int s : used) {
        Support unit = d.supports[s];
        if (unit.kind == Support::Kind::circle3 && unit.space.carrier_sphere >= 0 &&
            unit.space.carrier_sphere < static_cast<int>(d.supports.size()))
            unit = d.supports[unit.space.carrier_sphere];
        bool duplicate = false;
        for (const Support& have : cover_units)
            if (same_support_geometry(have, unit, tol)) duplicate = true;
        if (!duplicate) cover_units.push_back(unit);
    }
    report.certified_cover = static_cast<int>(cover_units.size());

    std::sort(viol.begin(), viol.end(), [](const Violation& x, const Violation& y) {
        return std::tie(x.kind, x.arc_a, x.arc_b) < std::tie(y.kind, y.arc_a, y.arc_b);
    });
    report.valid = viol.empty();
    return report;
}

// ---------------------------------------------------------------------------

namespace {

Vec2 invert_point(Vec2 p, Vec2 c, double rho) {
    Vec2 d = p - c;
    double n2 = dot(d, d);
    return c + (rho * rho / n2) * d;
}

Vec3 invert_point(Vec3 p, Vec3 c, double rho) {
    Vec3 d = p - c;
    double n2 = dot(d, d);
    return c + (rho * rho / n2) * d;
}

} // namespace

Drawing invert(const Drawing& d, Vec2 center, double rho, double tol) {
    if (d.dim != 2) throw validation_error("invert: use invert3 for 3D drawings");
    for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
        if (dist(d.vertex2(v), center) < tol)
            throw validation_error("inversion center coincides with vertex " + std::to_string(v) +
                                   "; choose a different center");
    for (const Support& s : d.supports)
        if (s.flat.distance(center) < tol)
            throw validation_error("a support passes through the inversion center; choose a "
                                   "different center");

    Drawing out;
    out.dim = 2;
    out.graph = d.graph;
    out.vertices.resize(d.vertices.size());
    for (size_t v = 0; v < d.vertices.size(); ++v) {
        Vec2 p = invert_point(d.vertex2(static_cast<int>(v)), center, rho);
        out.vertices[v] = {p.x, p.y, 0};
    }
    for (const Support& s : d.supports) {
        if (s.kind == Support::Kind::circle) {
            // image of a circle not through the center is again a circle
            Vec2 cc = s.flat.center;
            double k = rho * rho / (dot(cc - center, cc - center) - s.flat.radius * s.flat.radius);
            Vec2 ic = center + k * (cc - center);
            out.supports.push_back(Support::circle(ic, std::fabs(k) * s.flat.radius));
        } else {
            // a line misses the center, so its image is a circle through it
            Vec2 a = invert_point(s.flat.eval(-1.0), center, rho);
            Vec2 b = invert_point(s.flat.eval(1.0), center, rho);
            GenCircle2 img = circle_through(a, b, center, tol);
            if (img.kind != GenCircle2::Kind::circle)
                throw integrity_error("line image degenerated under inversion");
            out.supports.push_back(Support::circle(img.center, img.radius));
        }
    }
    for (const Arc& a : d.arcs) {
        Arc na = a;
        const GenCircle2& img = out.supports[a.support].flat;
        if (a.full) {
            na.start = 0;
            na.delta = kTwoPi;
            out.arcs.push_back(na);
            continue;
        }
        Vec2 p0 = invert_point({d.arc_point(a, 0).x, d.arc_point(a, 0).y}, center, rho);
        Vec2 p1 = invert_point({d.arc_point(a, 1).x, d.arc_point(a, 1).y}, center, rho);
        Vec2 pm = invert_point({d.arc_point(a, 0.5).x, d.arc_point(a, 0.5).y}, center, rho);
        double f0 = img.param_of(p0);
        double f1 = img.param_of(p1);
        double fm = img.param_of(pm);
        // choose the sweep direction that passes through the midpoint image
        double ccw = wrap_angle(f1 - f0);
        double mid_ccw = wrap_angle(fm - f0);
        na.start = f0;
        na.delta = mid_ccw <= ccw + 1e-12 ? ccw : ccw - kTwoPi;
        out.arcs.push_back(na);
    }
    return out;
}

Drawing invert3(const Drawing& d, Vec3 center, double rho, double tol) {
    if (d.dim != 3) throw validation_error("invert3: drawing is not 3D");
    for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
        if (dist(d.vertex3(v), center) < tol)
            throw validation_error("inversion center coincides with a vertex");
    for (const Support& s : d.supports) {
        double off = s.kind == Support::Kind::sphere
                         ? std::fabs(dist(s.ball.center, center) - s.ball.radius)
                         : s.space.distance(center);
        if (off < tol)
            throw validation_error("a support passes through the inversion center");
    }

    Drawing out;
    out.dim = 3;
    out.graph = d.graph;
    out.vertices.resize(d.vertices.size());
    for (size_t v = 0; v < d.vertices.size(); ++v) {
        Vec3 p = invert_point(d.vertex3(static_cast<int>(v)), center, rho);
        out.vertices[v] = {p.x, p.y, p.z};
    }
    for (const Support& s : d.supports) {
        if (s.kind == Support::Kind::sphere) {
            Vec3 cc = s.ball.center;
            double k = rho * rho / (dot(cc - center, cc - center) - s.ball.radius * s.ball.radius);
            out.supports.push_back(
                Support::sphere(center + k * (cc - center), std::fabs(k) * s.ball.radius));
        } else if (s.kind == Support::Kind::circle3) {
            Vec3 a = invert_point(s.space.eval(0.0), center, rho);
            Vec3 b = invert_point(s.space.eval(2.1), center, rho);
            Vec3 c = invert_point(s.space.eval(4.2), center, rho);
            Circle3 img = circle3_through(a, b, c);
            img.carrier_sphere = s.space.carrier_sphere;
            out.supports.push_back(Support::circle3(img));
        } else {
            throw validation_error("invert3: flat support in a 3D drawing");
        }
    }
    for (const Arc& a : d.arcs) {
        Arc na = a;
        if (a.full) {
            na.start = 0;
            na.delta = kTwoPi;
            out.arcs.push_back(na);
            continue;
        }
        const Circle3& img = out.supports[a.support].space;
        Vec3 p0 = invert_point(d.arc_point(a, 0), center, rho);
        Vec3 p1 = invert_point(d.arc_point(a, 1), center, rho);
        Vec3 pm = invert_point(d.arc_point(a, 0.5), center, rho);
        double f0 = img.param_of(p0);
        double f1 = img.param_of(p1);
        double fm = img.param_of(pm);
        double ccw = wrap_angle(f1 - f0);
        double mid_ccw = wrap_angle(fm - f0);
        na.start = f0;
        na.delta = mid_ccw <= ccw + 1e-12 ? ccw : ccw - kTwoPi;
        out.arcs.push_back(na);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vec2> sample_cycle(const Drawing& d, const std::vector<int>& cycle,
                               const std::map<Edge, const Arc*>& arc_of) {
    std::vector<Vec2> poly;
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % k];
        const Arc* a = arc_of.at({std::min(u, v), std::max(u, v)});
        int steps = std::max(8, static_cast<int>(std::fabs(a->delta) / 0.03));
        bool forward = a->u == u;
        for (int s = 0; s < steps; ++s) {
            double t = static_cast<double>(s) / steps;
            Vec3 p = d.arc_point(*a, forward ? t : 1.0 - t);
            poly.push_back({p.x, p.y});
        }
    }
    return poly;
}

bool point_in_polygon(Vec2 p, const std::vector<Vec2>& poly) {
    bool inside = false;
    size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
            double xint = poly[j].x +
                          (p.y - poly[j].y) / (poly[i].y - poly[j].y) * (poly[i].x - poly[j].x);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double dist_to_polyline(Vec2 p, const std::vector<Vec2>& poly) {
    double best = 1e300;
    size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        Vec2 a = poly[j], b = poly[i];
        Vec2 ab = b - a;
        double len2 = dot(ab, ab);
        double t = len2 > 0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, dist(p, a + t * ab));
    }
    return best;
}

} // namespace

NestedCyclesReport nested_cycles_lower(const Drawing& d,
                                       const std::vector<std::vector<int>>& cycles,
                                       double tol) {
    if (d.dim != 2) throw validation_error("nested_cycles_lower: drawing must be 2D");
    std::map<Edge, const Arc*> arc_of;
    for (const Arc& a : d.arcs)
        if (a.u >= 0) arc_of[{std::min(a.u, a.v), std::max(a.u, a.v)}] = &a;

    // every claimed cycle must be a cycle of the drawn graph
    for (const auto& cyc : cycles) {
        if (cyc.size() < 3) throw validation_error("claimed cycle shorter than 3 vertices");
        std::set<int> distinct(cyc.begin(), cyc.end());
        if (distinct.size() != cyc.size())
            throw validation_error("claimed cycle repeats a vertex");
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (!d.graph.has_edge(u, v))
                throw validation_error("claimed cycle uses a non-edge (" + std::to_string(u) +
                                       "," + std::to_string(v) + ")");
            if (!arc_of.count({std::min(u, v), std::max(u, v)}))
                throw validation_error("claimed cycle edge has no arc in the drawing");
        }
    }

    NestedCyclesReport report;
    if (cycles.empty()) return report;
    report.verified = 1; // a single closed curve always stands alone

    std::vector<Vec2> outer = sample_cycle(d, cycles[0], arc_of);
    for (size_t i = 1; i < cycles.size(); ++i) {
        std::vector<Vec2> inner = sample_cycle(d, cycles[i], arc_of);
        bool ok = true;
        for (const Vec2& p : inner) {
            if (!point_in_polygon(p, outer) || dist_to_polyline(p, outer) <= tol) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            report.failure = "cycle " + std::to_string(i) +
                             " is not strictly inside cycle " + std::to_string(i - 1);
            break;
        }
        ++report.verified;
        outer = std::move(inner);
    }
    return report;
}

} // namespace arccover
