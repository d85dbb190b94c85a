#include "arccover/constructions.hpp"

#include "arccover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace arccover {

namespace {

constexpr double kTwoPi = 2 * M_PI;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}

/// Sweep from phi_u to phi_v on a circle that stays clear of the given
/// other angles (used when the direct arc between two of a circle's
/// designated points must not run over the remaining ones).
double sweep_avoiding(double phi_u, double phi_v, const std::vector<double>& avoid) {
    double ccw = wrap_angle(phi_v - phi_u);
    for (double psi : avoid) {
        double off = wrap_angle(psi - phi_u);
        if (off > 1e-9 && off < ccw - 1e-9) return ccw - kTwoPi; // go clockwise instead
    }
    return ccw;
}

} // namespace

Drawing icosahedron_seven_circles() {
    const double s3 = std::sqrt(3.0);
    const double d_l = (3 + s3) / 2, r_l = std::sqrt(2.5 + s3);
    const double d_m = (3 - s3) / 2, r_m = std::sqrt(2.5 - s3);

    Drawing d;
    d.dim = 2;

    // supports: K, L0..L2, M0..M2
    auto polar = [](double r, double a) { return Vec2{r * std::cos(a), r * std::sin(a)}; };
    d.supports.push_back(Support::circle({0, 0}, 1.0));
    for (int i = 0; i < 3; ++i)
        d.supports.push_back(Support::circle(polar(d_l, i * kTwoPi / 3), r_l));
    for (int i = 0; i < 3; ++i)
        d.supports.push_back(Support::circle(polar(d_m, M_PI / 2 + i * kTwoPi / 3), r_m));
    const int K = 0;
    auto L = [](int i) { return 1 + i; };
    auto M = [](int i) { return 4 + i; };

    // vertices: A_i, B_i, C_i, D_i (ids 0..2, 3..5, 6..8, 9..11)
    auto A = [](int i) { return i; };
    auto B = [](int i) { return 3 + i; };
    auto C = [](int i) { return 6 + i; };
    auto D = [](int i) { return 9 + i; };
    d.vertices.resize(12);
    auto put = [&](int id, double r, double a) {
        Vec2 p = polar(r, a);
        d.vertices[id] = {p.x, p.y, 0};
    };
    for (int i = 0; i < 3; ++i) {
        put(A(i), (1 + s3) / 2, M_PI / 3 + i * kTwoPi / 3);
        put(B(i), 1.0, M_PI / 3 + i * kTwoPi / 3);
        put(C(i), 1.0, M_PI / 6 + i * kTwoPi / 3);
        put(D(i), (s3 - 1) / 2, -M_PI / 6 + i * kTwoPi / 3);
    }

    // circle membership: A_i on L_i, L_{i+1}, M_i; B_i on L_i, L_{i+1}, K;
    // C_i on M_i, M_{i+2}, K; D_i on L_i, M_i, M_{i+1}
    std::vector<std::vector<int>> members(7);
    for (int i = 0; i < 3; ++i) {
        members[K].push_back(B(i));
        members[K].push_back(C(i));
        members[L(i)].push_back(A(i));
        members[L((i + 1) % 3)].push_back(A(i));
        members[M(i)].push_back(A(i));
        members[L(i)].push_back(B(i));
        members[L((i + 1) % 3)].push_back(B(i));
        members[M(i)].push_back(C(i));
        members[M((i + 2) % 3)].push_back(C(i));
        members[L(i)].push_back(D(i));
        members[M(i)].push_back(D(i));
        members[M((i + 1) % 3)].push_back(D(i));
    }

    Graph g(12);
    // on every circle: sort member vertices by angle; consecutive pairs are
    // edges, except the designated gap pair (the path endpoints)
    auto build_circle = [&](int support, std::pair<int, int> gap) {
        const GenCircle2& circ = d.supports[support].flat;
        auto pts = members[support];
        std::sort(pts.begin(), pts.end(), [&](int a, int b) {
            return circ.param_of(d.vertex2(a)) < circ.param_of(d.vertex2(b));
        });
        int k = static_cast<int>(pts.size());
        for (int t = 0; t < k; ++t) {
            int u = pts[t], v = pts[(t + 1) % k];
            if (gap.first >= 0 && ((u == gap.first && v == gap.second) ||
                                   (u == gap.second && v == gap.first)))
                continue;
            double pu = circ.param_of(d.vertex2(u));
            double pv = circ.param_of(d.vertex2(v));
            g.add_edge(u, v);
            Arc arc;
            arc.u = u;
            arc.v = v;
            arc.support = support;
            arc.start = pu;
            arc.delta = wrap_angle(pv - pu); // next point counterclockwise
            d.arcs.push_back(arc);
        }
    };
    build_circle(K, {-1, -1}); // the whole unit circle is used
    for (int i = 0; i < 3; ++i) build_circle(L(i), {A(i), B(i)});
    for (int i = 0; i < 3; ++i) build_circle(M(i), {C((i + 1) % 3), D((i + 2) % 3)});

    g.meta["family"] = "ico7";
    g.meta["labels"] = "A0,A1,A2,B0,B1,B2,C0,C1,C2,D0,D1,D2";
    d.graph = std::move(g);
    return d;
}

Drawing kpq_circle_drawing(int p, int q) {
    if (p < 1 || q < 1) throw validation_error("kpq_circle_drawing requires p, q >= 1");
    int pp = (p + 1) / 2, qq = (q + 1) / 2;

    Drawing d;
    d.dim = 3;
    d.graph = complete_bipartite(p, q);
    d.vertices.resize(p + q);

    // axis points of sphere j (center (0,0,j), radius sqrt(1+j^2))
    auto axis_point = [](int j, int slot) {
        double c = j, r = std::sqrt(1.0 + j * j);
        return Vec3{0, 0, slot == 0 ? c + r : c - r};
    };
    auto rim_point = [&](int k, int slot) {
        double a = k * M_PI / qq;
        Vec3 u{std::cos(a), std::sin(a), 0};
        return slot == 0 ? u : Vec3{-u.x, -u.y, -u.z};
    };
    for (int i = 0; i < p; ++i) {
        Vec3 v = axis_point(i / 2, i % 2);
        d.vertices[i] = {v.x, v.y, v.z};
    }
    for (int i = 0; i < q; ++i) {
        Vec3 v = rim_point(i / 2, i % 2);
        d.vertices[p + i] = {v.x, v.y, v.z};
    }

    // one circle per (sphere pair, rim pair)
    std::map<std::pair<int, int>, int> circle_of;
    for (int j = 0; j < pp; ++j)
        for (int k = 0; k < qq; ++k) {
            double a = k * M_PI / qq;
            Circle3 c;
            c.center = {0, 0, double(j)};
            c.radius = std::sqrt(1.0 + j * j);
            c.normal = {-std::sin(a), std::cos(a), 0};
            circle_of[{j, k}] = static_cast<int>(d.supports.size());
            d.supports.push_back(Support::circle3(c));
        }

    for (auto& [u, v] : d.graph.edges()) {
        int pi = u, qi = v - p; // bipartite generator lists (P, Q) pairs
        int j = pi / 2, k = qi / 2;
        int support = circle_of.at({j, k});
        const Circle3& circ = d.supports[support].space;
        double phi_u = circ.param_of(d.vertex3(u));
        double phi_v = circ.param_of(d.vertex3(v));
        // the direct arc must dodge the circle's other two corner points
        std::vector<double> avoid;
        for (int slot = 0; slot < 2; ++slot) {
            avoid.push_back(circ.param_of(axis_point(j, slot)));
            avoid.push_back(circ.param_of(rim_point(k, slot)));
        }
        std::vector<double> others;
        for (double psi : avoid)
            if (std::fabs(std::remainder(psi - phi_u, kTwoPi)) > 1e-9 &&
                std::fabs(std::remainder(psi - phi_v, kTwoPi)) > 1e-9)
                others.push_back(psi);
        Arc arc;
        arc.u = u;
        arc.v = v;
        arc.support = support;
        arc.start = phi_u;
        arc.delta = sweep_avoiding(phi_u, phi_v, others);
        d.arcs.push_back(arc);
    }
    return d;
}

std::vector<int> kn_book_embedding(int n) {
    if (n < 1) throw validation_error("kn_book_embedding requires n >= 1");
    int even_n = n % 2 == 0 ? n : n + 1;
    int pages_count = even_n / 2;
    std::map<Edge, int> page_of;
    for (int j = 0; j < pages_count; ++j) {
        // zigzag Hamiltonian path j, j+1, j-1, j+2, j-2, ...
        std::vector<int> seq{j};
        for (int t = 1; seq.size() < static_cast<size_t>(even_n); ++t) {
            seq.push_back(((j + t) % even_n + even_n) % even_n);
            if (seq.size() < static_cast<size_t>(even_n))
                seq.push_back(((j - t) % even_n + even_n) % even_n);
        }
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            int a = seq[i], b = seq[i + 1];
            if (a >= n || b >= n) continue; // odd n: drop the padding vertex
            page_of[{std::min(a, b), std::max(a, b)}] = j;
        }
    }
    Graph g = complete(n);
    std::vector<int> pages;
    pages.reserve(g.edges().size());
    for (auto& e : g.edges()) pages.push_back(page_of.at(e));
    return pages;
}

Drawing book_to_spheres(int n, const std::vector<int>& pages) {
    Graph g = complete(n);
    if (pages.size() != g.edges().size())
        throw validation_error("book_to_spheres: one page index per K_n edge expected");
    int page_count = 1 + *std::max_element(pages.begin(), pages.end());

    // interleaving same-page edges are not a book embedding
    for (size_t e1 = 0; e1 < pages.size(); ++e1)
        for (size_t e2 = e1 + 1; e2 < pages.size(); ++e2) {
            if (pages[e1] != pages[e2]) continue;
            auto [a, b] = g.edges()[e1];
            auto [c, dd] = g.edges()[e2];
            bool c_in = a < c && c < b;
            bool d_in = a < dd && dd < b;
            if (c_in != d_in && c != a && c != b && dd != a && dd != b)
                throw validation_error("invalid book embedding: edges (" + std::to_string(a) +
                                       "," + std::to_string(b) + ") and (" + std::to_string(c) +
                                       "," + std::to_string(dd) + ") interleave on page " +
                                       std::to_string(pages[e1]));
        }

    Drawing d;
    d.dim = 3;
    d.graph = std::move(g);
    d.vertices.resize(n);
    for (int i = 0; i < n; ++i) {
        double a = i * kTwoPi / n;
        d.vertices[i] = {std::cos(a), std::sin(a), 0};
    }

    int sphere_count = (page_count + 1) / 2;
    for (int j = 0; j < sphere_count; ++j)
        d.supports.push_back(Support::sphere({0, 0, double(j)}, std::sqrt(1.0 + j * j)));

    for (size_t e = 0; e < pages.size(); ++e) {
        int page = pages[e];
        int j = page / 2;
        double c = j, r = std::sqrt(1.0 + j * j);
        // upper pages anchor at the sphere's bottom point and vice versa;
        // the drawn arc avoids the anchor, which keeps it on one hemisphere
        Vec3 anchor = page % 2 == 0 ? Vec3{0, 0, c - r} : Vec3{0, 0, c + r};
        auto [u, v] = d.graph.edges()[e];
        Circle3 circ = circle3_through(d.vertex3(u), d.vertex3(v), anchor);
        circ.carrier_sphere = j;
        int support = static_cast<int>(d.supports.size());
        d.supports.push_back(Support::circle3(circ));
        double phi_u = circ.param_of(d.vertex3(u));
        double phi_v = circ.param_of(d.vertex3(v));
        Arc arc;
        arc.u = u;
        arc.v = v;
        arc.support = support;
        arc.start = phi_u;
        arc.delta = sweep_avoiding(phi_u, phi_v, {circ.param_of(anchor)});
        d.arcs.push_back(arc);
    }
    return d;
}

Drawing nested_triangles_drawing(int k) {
    EmbeddedGraph eg = nested_triangulation(k);
    Drawing d;
    d.dim = 2;
    d.graph = eg.graph;
    d.vertices.resize(3 * k);
    for (int i = 0; i < k; ++i) {
        double r = std::pow(3.0, k - 1 - i);
        for (int j = 0; j < 3; ++j) {
            double a = M_PI / 2 + j * kTwoPi / 3;
            d.vertices[3 * i + j] = {r * std::cos(a), r * std::sin(a), 0};
        }
    }
    for (auto& [u, v] : d.graph.edges()) {
        Vec2 pu = d.vertex2(u), pv = d.vertex2(v);
        int support = static_cast<int>(d.supports.size());
        d.supports.push_back(Support::line(pu, pv - pu));
        Arc arc;
        arc.u = u;
        arc.v = v;
        arc.support = support;
        arc.start = 0;
        arc.delta = dist(pu, pv);
        d.arcs.push_back(arc);
    }
    return d;
}

Drawing cube_four_arc_drawing() {
    const double r = 1.25;
    const double h = std::sqrt(r * r - 1.0); // 0.75
    Drawing d;
    d.dim = 2;

    // inner diamond 0..3 (top, right, bottom, left), outer diamond 4..7
    auto at = [&](double radius, int side) {
        double a = M_PI / 2 - side * M_PI / 2;
        return Vec2{radius * std::cos(a), radius * std::sin(a)};
    };
    d.vertices.resize(8);
    for (int side = 0; side < 4; ++side) {
        Vec2 in = at(1 - h, side), out = at(1 + h, side);
        d.vertices[side] = {in.x, in.y, 0};
        d.vertices[4 + side] = {out.x, out.y, 0};
    }

    // circle `side` is centered between spokes side and side+1
    for (int side = 0; side < 4; ++side) {
        double a = M_PI / 4 - side * M_PI / 2;
        d.supports.push_back(Support::circle({std::sqrt(2.0) * std::cos(a) / 1.0,
                                              std::sqrt(2.0) * std::sin(a) / 1.0},
                                             r));
    }

    Graph g(8);
    // path on circle `side`: inner(side) -> inner(side+1) -> outer(side+1)
    // -> outer(side); three edges each, twelve in total
    for (int side = 0; side < 4; ++side) {
        int nxt = (side + 1) % 4;
        int chain[4] = {side, nxt, 4 + nxt, 4 + side};
        const GenCircle2& circ = d.supports[side].flat;
        std::vector<double> corner_angles;
        for (int c : chain) corner_angles.push_back(circ.param_of(d.vertex2(c)));
        for (int t = 0; t < 3; ++t) {
            int u = chain[t], v = chain[t + 1];
            g.add_edge(u, v);
            std::vector<double> others;
            for (int o = 0; o < 4; ++o)
                if (o != t && o != t + 1) others.push_back(corner_angles[o]);
            Arc arc;
            arc.u = u;
            arc.v = v;
            arc.support = side;
            arc.start = corner_angles[t];
            arc.delta = sweep_avoiding(corner_angles[t], corner_angles[t + 1], others);
            d.arcs.push_back(arc);
        }
    }
    g.meta["family"] = "cube4";
    d.graph = std::move(g);
    return d;
}

} // namespace arccover
