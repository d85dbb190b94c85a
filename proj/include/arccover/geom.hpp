#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace arccover {

inline constexpr double kDefaultTolerance = 1e-9;

struct Vec2 {
    double x = 0, y = 0;
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    double norm() const { return std::hypot(x, y); }
};
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Vec2 normalized(Vec2 a) {
    double n = a.norm();
    return {a.x / n, a.y / n};
}
inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

struct Vec3 {
    double x = 0, y = 0, z = 0;
    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Vec3 normalized(Vec3 a) {
    double n = a.norm();
    return {a.x / n, a.y / n, a.z / n};
}
inline double dist(Vec3 a, Vec3 b) { return (a - b).norm(); }

/// Generalized circle in the plane: a circle, or a line treated as a
/// circle of infinite radius.
struct GenCircle2 {
    enum class Kind { circle, line };
    Kind kind = Kind::circle;
    Vec2 center;          // circle
    double radius = 0;    // circle, > 0
    Vec2 point;           // line
    Vec2 dir{1, 0};       // line, unit length

    static GenCircle2 make_circle(Vec2 c, double r) { return {Kind::circle, c, r, {}, {}}; }
    static GenCircle2 make_line(Vec2 p, Vec2 d) {
        return {Kind::line, {}, 0, p, normalized(d)};
    }

    /// Point at circle angle phi, or at line parameter phi (arc length).
    Vec2 eval(double phi) const {
        if (kind == Kind::circle)
            return {center.x + radius * std::cos(phi), center.y + radius * std::sin(phi)};
        return point + phi * dir;
    }
    /// Circle angle of p (not required to lie on the circle), or the line
    /// parameter of its projection.
    double param_of(Vec2 p) const {
        if (kind == Kind::circle) return std::atan2(p.y - center.y, p.x - center.x);
        return dot(p - point, dir);
    }
    /// Distance from p to the support set.
    double distance(Vec2 p) const {
        if (kind == Kind::circle) return std::fabs(dist(p, center) - radius);
        return std::fabs(cross(dir, p - point));
    }
};

/// The unique generalized circle through three distinct points (a line
/// when they are collinear within tol).
GenCircle2 circle_through(Vec2 a, Vec2 b, Vec2 c, double tol = kDefaultTolerance);

struct Intersections2 {
    std::vector<Vec2> points;
    bool tangent = false;   // supports touch rather than cross
    bool coincident = false; // supports are the same set within tol
};

Intersections2 intersect(const GenCircle2& a, const GenCircle2& b, double tol = kDefaultTolerance);

/// Circle in 3-space.
struct Circle3 {
    Vec3 center;
    double radius = 0;
    Vec3 normal{0, 0, 1}; // unit
    int carrier_sphere = -1;

    /// Deterministic in-plane basis.
    Vec3 basis_u() const;
    Vec3 basis_v() const { return cross(normal, basis_u()); }
    Vec3 eval(double phi) const {
        Vec3 u = basis_u(), v = basis_v();
        return center + (radius * std::cos(phi)) * u + (radius * std::sin(phi)) * v;
    }
    double param_of(Vec3 p) const {
        Vec3 d = p - center;
        return std::atan2(dot(d, basis_v()), dot(d, basis_u()));
    }
    double distance(Vec3 p) const {
        Vec3 d = p - center;
        double h = dot(d, normal);
        Vec3 in_plane = d - h * normal;
        return std::hypot(h, in_plane.norm() - radius);
    }
};

struct Sphere {
    Vec3 center;
    double radius = 0;
};

struct Intersections3 {
    std::vector<Vec3> points;
    bool tangent = false;
    bool coincident = false;
};

/// Circle-circle intersection in 3-space: coplanar circles reduce to the
/// planar case, otherwise candidates come from the plane-plane line.
Intersections3 intersect(const Circle3& a, const Circle3& b, double tol = kDefaultTolerance);

/// Circumcircle of three non-collinear points in 3-space.
Circle3 circle3_through(Vec3 a, Vec3 b, Vec3 c);

} // namespace arccover
