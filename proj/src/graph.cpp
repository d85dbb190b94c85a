#include "arccover/graph.hpp"

#include "arccover/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

namespace arccover {

void Graph::add_edge(int u, int v) {
    if (u == v) throw validation_error("self-loop rejected at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw validation_error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                               std::to_string(v) + ") with n = " + std::to_string(n_));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
        throw validation_error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    if (adj_.empty()) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n_;
}

void RotationSystem::validate_against(const Graph& g) const {
    if (static_cast<int>(order.size()) != g.vertex_count())
        throw validation_error("rotation system has " + std::to_string(order.size()) +
                               " lists for " + std::to_string(g.vertex_count()) + " vertices");
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> a = g.neighbors(v);
        std::vector<int> b = order[v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw validation_error("rotation list of vertex " + std::to_string(v) +
                                   " is not a permutation of its adjacency");
    }
}

std::vector<Face> trace_faces(const EmbeddedGraph& embedding) {
    const Graph& g = embedding.graph;
    const auto& rot = embedding.rotation.order;
    embedding.rotation.validate_against(g);

    // position of u within v's rotation list
    std::vector<std::map<int, int>> pos(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int t = 0; t < static_cast<int>(rot[v].size()); ++t)
            pos[v][rot[v][t]] = t;

    std::set<std::pair<int, int>> traced;
    std::vector<Face> faces;
    std::vector<std::pair<int, int>> directed;
    directed.reserve(2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());

    for (const auto& start : directed) {
        if (traced.count(start)) continue;
        Face f;
        std::pair<int, int> cur = start;
        do {
            if (traced.count(cur))
                throw validation_error("rotation system is inconsistent: directed edge retraced");
            traced.insert(cur);
            f.walk.push_back(cur);
            auto [u, v] = cur;
            const auto& lv = rot[v];
            int t = pos[v].at(u);
            int w = lv[(t + 1) % lv.size()];
            cur = {v, w};
        } while (cur != start);
        faces.push_back(std::move(f));
    }
    return faces;
}

std::vector<Face> trace_faces_checked(const EmbeddedGraph& embedding) {
    auto faces = trace_faces(embedding);
    const Graph& g = embedding.graph;
    if (!g.connected()) throw integrity_error("embedding is not connected");
    long euler = static_cast<long>(g.vertex_count()) - g.edge_count() + static_cast<long>(faces.size());
    if (euler != 2)
        throw integrity_error("embedding violates Euler's formula: V - E + F = " + std::to_string(euler));
    if (embedding.outer_face < 0 || embedding.outer_face >= static_cast<int>(faces.size()))
        throw validation_error("outer face index out of range");
    return faces;
}

std::optional<PlatonicSolid> platonic_from_name(const std::string& name) {
    if (name == "tetrahedron") return PlatonicSolid::tetrahedron;
    if (name == "cube") return PlatonicSolid::cube;
    if (name == "octahedron") return PlatonicSolid::octahedron;
    if (name == "dodecahedron") return PlatonicSolid::dodecahedron;
    if (name == "icosahedron") return PlatonicSolid::icosahedron;
    return std::nullopt;
}

std::string platonic_name(PlatonicSolid s) {
    switch (s) {
        case PlatonicSolid::tetrahedron: return "tetrahedron";
        case PlatonicSolid::cube: return "cube";
        case PlatonicSolid::octahedron: return "octahedron";
        case PlatonicSolid::dodecahedron: return "dodecahedron";
        case PlatonicSolid::icosahedron: return "icosahedron";
    }
    return "?";
}

namespace {

using Vec3 = std::array<double, 3>;

std::vector<Vec3> platonic_coordinates(PlatonicSolid s) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    switch (s) {
        case PlatonicSolid::tetrahedron:
            pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
            break;
        case PlatonicSolid::cube:
            for (int x : {-1, 1})
                for (int y : {-1, 1})
                    for (int z : {-1, 1}) pts.push_back({double(x), double(y), double(z)});
            break;
        case PlatonicSolid::octahedron:
            pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
            break;
        case PlatonicSolid::icosahedron:
            for (double a : {-1.0, 1.0})
                for (double b : {-phi, phi}) {
                    pts.push_back({0, a, b});
                    pts.push_back({a, b, 0});
                    pts.push_back({b, 0, a});
                }
            break;
        case PlatonicSolid::dodecahedron:
            for (int x : {-1, 1})
                for (int y : {-1, 1})
                    for (int z : {-1, 1}) pts.push_back({double(x), double(y), double(z)});
            for (double a : {-1.0 / phi, 1.0 / phi})
                for (double b : {-phi, phi}) {
                    pts.push_back({0, a, b});
                    pts.push_back({a, b, 0});
                    pts.push_back({b, 0, a});
                }
            break;
    }
    // canonical vertex labeling: lexicographic coordinate order
    std::sort(pts.begin(), pts.end());
    return pts;
}

double dist(const Vec3& a, const Vec3& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 normalize(const Vec3& a) {
    double l = std::sqrt(dot(a, a));
    return {a[0] / l, a[1] / l, a[2] / l};
}

/// Clockwise neighbor order as seen from outside a convex solid centered
/// at the origin: sort by decreasing angle in the tangent plane at the
/// vertex, oriented by the outward vertex normal.
RotationSystem rotation_from_solid(const std::vector<Vec3>& pts, const Graph& g) {
    RotationSystem rs;
    rs.order.resize(pts.size());
    for (int v = 0; v < static_cast<int>(pts.size()); ++v) {
        Vec3 n = normalize(pts[v]);
        // pick the coordinate axis least parallel to n as angular reference
        int axis = 0;
        for (int a = 1; a < 3; ++a)
            if (std::fabs(n[a]) < std::fabs(n[axis])) axis = a;
        Vec3 ref{0, 0, 0};
        ref[axis] = 1;
        Vec3 e1 = normalize(cross(n, ref));
        Vec3 e2 = cross(n, e1);
        std::vector<std::pair<double, int>> ang;
        for (int u : g.neighbors(v)) {
            Vec3 d = sub(pts[u], pts[v]);
            ang.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), u);
        }
        std::sort(ang.begin(), ang.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (auto& [_, u] : ang) rs.order[v].push_back(u);
    }
    return rs;
}

/// Clockwise neighbor order in a plane drawing with y pointing up.
RotationSystem rotation_from_plane(const std::vector<std::array<double, 2>>& pts, const Graph& g) {
    RotationSystem rs;
    rs.order.resize(pts.size());
    for (int v = 0; v < static_cast<int>(pts.size()); ++v) {
        std::vector<std::pair<double, int>> ang;
        for (int u : g.neighbors(v))
            ang.emplace_back(std::atan2(pts[u][1] - pts[v][1], pts[u][0] - pts[v][0]), u);
        std::sort(ang.begin(), ang.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (auto& [_, u] : ang) rs.order[v].push_back(u);
    }
    return rs;
}

} // namespace

EmbeddedGraph platonic(PlatonicSolid solid) {
    auto pts = platonic_coordinates(solid);
    int n = static_cast<int>(pts.size());
    double edge_len = 1e100;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edge_len = std::min(edge_len, dist(pts[i], pts[j]));
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(dist(pts[i], pts[j]) - edge_len) < 1e-9) g.add_edge(i, j);
    EmbeddedGraph eg;
    eg.graph = std::move(g);
    eg.rotation = rotation_from_solid(pts, eg.graph);
    eg.outer_face = 0;
    eg.graph.meta["family"] = "platonic:" + platonic_name(solid);
    trace_faces_checked(eg);
    return eg;
}

EmbeddedGraph platonic(const std::string& name) {
    auto s = platonic_from_name(name);
    if (!s) throw validation_error("unknown platonic solid: " + name);
    return platonic(*s);
}

EmbeddedGraph nested_triangulation(int k) {
    if (k < 2) throw validation_error("nested_triangulation requires k >= 2");
    Graph g(3 * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 3; ++j) g.add_edge(3 * i + j, 3 * i + (j + 1) % 3);
    // ring i+1 corner j attaches to ring i corners j and j+1
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j < 3; ++j) {
            g.add_edge(3 * (i + 1) + j, 3 * i + j);
            g.add_edge(3 * (i + 1) + j, 3 * i + (j + 1) % 3);
        }
    std::vector<std::array<double, 2>> pts(3 * k);
    for (int i = 0; i < k; ++i) {
        double r = std::pow(3.0, k - 1 - i);
        for (int j = 0; j < 3; ++j) {
            double a = M_PI / 2 + j * 2 * M_PI / 3;
            pts[3 * i + j] = {r * std::cos(a), r * std::sin(a)};
        }
    }
    EmbeddedGraph eg;
    eg.graph = std::move(g);
    eg.rotation = rotation_from_plane(pts, eg.graph);
    eg.graph.meta["family"] = "nested-tri:" + std::to_string(k);
    eg.graph.meta["outer_triangle"] = "0,1,2";
    eg.graph.meta["inner_triangle"] = std::to_string(3 * k - 3) + "," + std::to_string(3 * k - 2) +
                                      "," + std::to_string(3 * k - 1);
    // outer face = the one whose walk stays on ring 0
    auto faces = trace_faces(eg);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        bool all_outer = true;
        for (auto& [u, v] : faces[f].walk)
            if (u >= 3 || v >= 3) all_outer = false;
        if (all_outer && faces[f].degree() == 3) {
            eg.outer_face = f;
            break;
        }
    }
    trace_faces_checked(eg);
    return eg;
}

Graph complete(int n) {
    if (n < 1) throw validation_error("complete(n) requires n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.meta["family"] = "complete:" + std::to_string(n);
    return g;
}

Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw validation_error("complete_bipartite requires p, q >= 1");
    Graph g(p + q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
    g.meta["family"] = "bipartite:" + std::to_string(p) + "x" + std::to_string(q);
    return g;
}

} // namespace arccover
