#include "arccover/geom.hpp"

#include "arccover/errors.hpp"

#include <algorithm>

namespace arccover {

GenCircle2 circle_through(Vec2 a, Vec2 b, Vec2 c, double tol) {
    if (dist(a, b) < tol || dist(a, c) < tol || dist(b, c) < tol)
        throw validation_error("circle_through: coincident points");
    double area2 = cross(b - a, c - a);
    double scale = std::max({dist(a, b), dist(a, c), dist(b, c)});
    if (std::fabs(area2) < tol * scale) {
        return GenCircle2::make_line(a, b - a);
    }
    // circumcenter via perpendicular bisectors
    double bx = b.x - a.x, by = b.y - a.y;
    double cx = c.x - a.x, cy = c.y - a.y;
    double d = 2 * (bx * cy - by * cx);
    double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    Vec2 center{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
    return GenCircle2::make_circle(center, dist(center, a));
}

namespace {

Intersections2 line_line(const GenCircle2& a, const GenCircle2& b, double tol) {
    Intersections2 out;
    double den = cross(a.dir, b.dir);
    double off = cross(b.dir, a.point - b.point);
    if (std::fabs(den) < tol) {
        // parallel; coincident if a.point lies on b
        if (b.distance(a.point) < tol) out.coincident = true;
        return out;
    }
    double t = off / den;
    out.points.push_back(a.point + t * a.dir);
    return out;
}

Intersections2 circle_line(const GenCircle2& c, const GenCircle2& l, double tol) {
    Intersections2 out;
    // foot of the perpendicular from the circle center
    double t0 = dot(c.center - l.point, l.dir);
    Vec2 foot = l.point + t0 * l.dir;
    double h = dist(foot, c.center);
    if (h > c.radius + tol) return out;
    if (std::fabs(h - c.radius) <= tol) {
        out.tangent = true;
        out.points.push_back(foot);
        return out;
    }
    double half = std::sqrt(std::max(0.0, c.radius * c.radius - h * h));
    out.points.push_back(l.point + (t0 - half) * l.dir);
    out.points.push_back(l.point + (t0 + half) * l.dir);
    return out;
}

Intersections2 circle_circle(const GenCircle2& a, const GenCircle2& b, double tol) {
    Intersections2 out;
    double d = dist(a.center, b.center);
    if (d < tol && std::fabs(a.radius - b.radius) < tol) {
        out.coincident = true;
        return out;
    }
    double rs = a.radius + b.radius;
    double rd = std::fabs(a.radius - b.radius);
    if (d > rs + tol || d < rd - tol) return out;
    if (std::fabs(d - rs) <= tol || std::fabs(d - rd) <= tol) {
        out.tangent = true;
        // single touching point along the center line
        double sign = std::fabs(d - rs) <= tol ? 1.0 : (a.radius > b.radius ? 1.0 : -1.0);
        Vec2 dir = normalized(b.center - a.center);
        out.points.push_back(a.center + (a.radius * sign) * dir);
        return out;
    }
    double x = (d * d - b.radius * b.radius + a.radius * a.radius) / (2 * d);
    double y2 = a.radius * a.radius - x * x;
    double y = std::sqrt(std::max(0.0, y2));
    Vec2 ex = normalized(b.center - a.center);
    Vec2 ey{-ex.y, ex.x};
    Vec2 mid = a.center + x * ex;
    out.points.push_back(mid + y * ey);
    out.points.push_back(mid - y * ey);
    return out;
}

} // namespace

Intersections2 intersect(const GenCircle2& a, const GenCircle2& b, double tol) {
    using K = GenCircle2::Kind;
    if (a.kind == K::line && b.kind == K::line) return line_line(a, b, tol);
    if (a.kind == K::circle && b.kind == K::line) return circle_line(a, b, tol);
    if (a.kind == K::line && b.kind == K::circle) return circle_line(b, a, tol);
    return circle_circle(a, b, tol);
}

Vec3 Circle3::basis_u() const {
    // axis least parallel to the normal gives a stable reference
    Vec3 n = normal;
    double ax = std::fabs(n.x), ay = std::fabs(n.y), az = std::fabs(n.z);
    Vec3 ref = ax <= ay && ax <= az ? Vec3{1, 0, 0} : (ay <= az ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    return normalized(cross(n, ref));
}

Intersections3 intersect(const Circle3& a, const Circle3& b, double tol) {
    Intersections3 out;
    Vec3 n1 = normalized(a.normal), n2 = normalized(b.normal);
    Vec3 axis = cross(n1, n2);
    bool parallel = axis.norm() < tol;
    if (parallel) {
        if (std::fabs(dot(n1, b.center - a.center)) > tol) return out; // distinct planes
        // coplanar: planar circle-circle in the (u, v) frame of a
        Vec3 u = a.basis_u(), v = a.basis_v();
        auto to2 = [&](Vec3 p) { return Vec2{dot(p - a.center, u), dot(p - a.center, v)}; };
        GenCircle2 ca = GenCircle2::make_circle({0, 0}, a.radius);
        GenCircle2 cb = GenCircle2::make_circle(to2(b.center), b.radius);
        auto flat = intersect(ca, cb, tol);
        out.tangent = flat.tangent;
        out.coincident = flat.coincident;
        for (auto& p : flat.points) out.points.push_back(a.center + p.x * u + p.y * v);
        return out;
    }
    // line of plane-plane intersection
    double d1 = dot(n1, a.center), d2 = dot(n2, b.center);
    double nn = dot(n1, n2);
    double det = 1 - nn * nn;
    double c1 = (d1 - d2 * nn) / det;
    double c2 = (d2 - d1 * nn) / det;
    Vec3 p0 = c1 * n1 + c2 * n2;
    Vec3 dir = normalized(axis);
    // candidates: points of the line at distance radius from a.center
    Vec3 rel = p0 - a.center;
    double tb = dot(rel, dir);
    double cc = dot(rel, rel) - a.radius * a.radius;
    double disc = tb * tb - cc;
    if (disc < -tol * std::max(1.0, a.radius)) return out;
    std::vector<double> ts;
    if (disc <= tol * std::max(1.0, a.radius)) {
        ts.push_back(-tb);
        out.tangent = true;
    } else {
        double s = std::sqrt(std::max(0.0, disc));
        ts.push_back(-tb - s);
        ts.push_back(-tb + s);
    }
    for (double t : ts) {
        Vec3 q = p0 + t * dir;
        if (b.distance(q) < tol * std::max(1.0, b.radius) * 4) out.points.push_back(q);
    }
    return out;
}

Circle3 circle3_through(Vec3 a, Vec3 b, Vec3 c) {
    Vec3 ab = b - a, ac = c - a;
    Vec3 n = cross(ab, ac);
    double n2 = dot(n, n);
    if (n2 < 1e-24) throw validation_error("circle3_through: collinear points");
    // classic circumcenter formula
    Vec3 num = cross(dot(ab, ab) * ac - dot(ac, ac) * ab, n);
    Vec3 center = a + (1.0 / (2 * n2)) * num;
    Circle3 circ;
    circ.center = center;
    circ.radius = dist(center, a);
    circ.normal = normalized(n);
    return circ;
}

} // namespace arccover
