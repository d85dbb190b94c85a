#pragma once

#include "arccover/geom.hpp"
#include "arccover/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace arccover {

/// A support object arcs can lie on.  2D drawings use circle / line;
/// 3D drawings use circle3 entries, optionally tied to a carrier sphere
/// entry when the spheres are the claimed cover.
struct Support {
    enum class Kind { circle, line, circle3, sphere };
    Kind kind = Kind::circle;
    GenCircle2 flat;   // circle | line
    Circle3 space;     // circle3 (carrier_sphere indexes a sphere Support)
    Sphere ball;       // sphere

    static Support circle(Vec2 center, double radius) {
        Support s;
        s.kind = Kind::circle;
        s.flat = GenCircle2::make_circle(center, radius);
        return s;
    }
    static Support line(Vec2 point, Vec2 dir) {
        Support s;
        s.kind = Kind::line;
        s.flat = GenCircle2::make_line(point, dir);
        return s;
    }
    static Support circle3(const Circle3& c) {
        Support s;
        s.kind = Kind::circle3;
        s.space = c;
        return s;
    }
    static Support sphere(Vec3 center, double radius) {
        Support s;
        s.kind = Kind::sphere;
        s.ball = {center, radius};
        return s;
    }
};

/// One drawn edge: a sweep on its support.  Circle sweeps run from angle
/// `start` over a signed `delta`; line "sweeps" run over the arc-length
/// parameter interval [start, start + delta].  `full` marks a whole
/// circle with no endpoints.
struct Arc {
    int u = -1, v = -1; // vertex indices; -1/-1 for a full circle
    int support = -1;
    bool full = false;
    double start = 0;
    double delta = 0;
};

struct Drawing {
    int dim = 2;
    Graph graph;
    std::vector<std::array<double, 3>> vertices; // z unused when dim == 2
    std::vector<Support> supports;
    std::vector<Arc> arcs;

    Vec2 vertex2(int i) const { return {vertices[i][0], vertices[i][1]}; }
    Vec3 vertex3(int i) const { return {vertices[i][0], vertices[i][1], vertices[i][2]}; }

    /// Point of an arc at fraction t in [0, 1] of its sweep.
    Vec3 arc_point(const Arc& a, double t) const;
};

struct Violation {
    std::string kind; // "missing-arc", "endpoint", "off-support", "cross", "touch", "overlap"
    int arc_a = -1, arc_b = -1;
    std::array<double, 3> where{0, 0, 0};
    std::string note;
};

struct VerificationReport {
    bool valid = false;
    int support_count = 0;   // distinct supports referenced by arcs
    int certified_cover = 0; // after carrier resolution and geometric dedup
    std::vector<Violation> violations;
};

/// Certifies that the drawing is a crossing-free circular-arc drawing of
/// its graph: every arc sits on its support, endpoints meet their vertex
/// coordinates, and no two arcs intersect except at shared endpoint
/// vertices.  Failures are report entries, never exceptions.
VerificationReport verify_drawing(const Drawing& d, double tol = kDefaultTolerance);

/// Classical inversion x -> center + rho^2 (x - center) / |x - center|^2.
/// Supports map to supports (lines become circles through the center),
/// arcs are re-derived from mapped endpoint and midpoint samples.
/// Preconditions: no vertex and no support meets the inversion center.
Drawing invert(const Drawing& d, Vec2 center, double rho, double tol = kDefaultTolerance);
Drawing invert3(const Drawing& d, Vec3 center, double rho, double tol = kDefaultTolerance);

struct NestedCyclesReport {
    int verified = 0;        // length of the longest verified nested prefix
    std::string failure;     // empty when every claim held
};

/// Lemma-style certified lower bound: checks that each claimed cycle is a
/// cycle of the drawn graph and that each curve lies strictly inside the
/// previous one; k verified nested cycles force >= k covering circles.
NestedCyclesReport nested_cycles_lower(const Drawing& d,
                                       const std::vector<std::vector<int>>& cycles,
                                       double tol = kDefaultTolerance);

} // namespace arccover
