#include "arccover/bounds.hpp"

#include "arccover/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <cmath>
#include <numeric>

namespace arccover {

std::optional<Quantity> quantity_from_name(const std::string& name) {
    static const std::map<std::string, Quantity> table = {
        {"sigma12", Quantity::sigma12}, {"sigma13", Quantity::sigma13},
        {"sigma23", Quantity::sigma23}, {"seg", Quantity::seg},
        {"arc", Quantity::arc},         {"rho12", Quantity::rho12},
        {"rho13", Quantity::rho13},     {"rho23", Quantity::rho23},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::sigma12: return "sigma12";
        case Quantity::sigma13: return "sigma13";
        case Quantity::sigma23: return "sigma23";
        case Quantity::seg: return "seg";
        case Quantity::arc: return "arc";
        case Quantity::rho12: return "rho12";
        case Quantity::rho13: return "rho13";
        case Quantity::rho23: return "rho23";
    }
    return "?";
}

long ceil_sqrt(long n) {
    if (n <= 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while (r * r < n) ++r;
    return r;
}

long sigma_lower_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw validation_error("sigma_lower_degree: empty graph");
    long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long h = (g.degree(v) + 1) / 2; // ceil(deg/2)
        sum += h * (h - 1);
    }
    long d = 1 + 2 * sum;
    // smallest k with (2k-1)^2 >= d, i.e. k = ceil((ceil_sqrt(d)+1)/2)
    return (ceil_sqrt(d) + 2) / 2;
}

long sigma_lower_density(long n, long m) {
    if (!(m >= n && n >= 1))
        throw validation_error("sigma_lower_density requires m >= n >= 1");
    // radicand is (2m^2 - 2mn + n) / n; compare (2k-1)^2 against its ceiling
    long num = 2 * m * m - 2 * m * n + n;
    long q = (num + n - 1) / n;
    return (ceil_sqrt(q) + 2) / 2;
}

// ---- bisection width ----

int bisection_width_exact(const Graph& g) {
    int n = g.vertex_count();
    if (n > kBisectionMaxVertices)
        throw size_limit_error("bisection_width_exact supports n <= " +
                                   std::to_string(kBisectionMaxVertices) + ", got n = " +
                                   std::to_string(n),
                               kBisectionMaxVertices);
    if (n < 2) return 0;
    int k = (n + 1) / 2;
    std::vector<std::pair<uint32_t, uint32_t>> edge_bits;
    edge_bits.reserve(g.edges().size());
    for (auto& [u, v] : g.edges()) edge_bits.emplace_back(1u << u, 1u << v);

    int best = g.edge_count() + 1;
    // enumerate k-subsets containing vertex 0 (complement symmetry when n even
    // does not matter for correctness; full enumeration is cheap enough)
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        int cut = 0;
        for (auto& [bu, bv] : edge_bits)
            cut += ((mask & bu) != 0) != ((mask & bv) != 0);
        best = std::min(best, cut);
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

int sigma_lower_bisection(const Graph& g) {
    int bw = bisection_width_exact(g);
    return (bw + 1) / 2;
}

// ---- linear arboricity ----

namespace {

struct ForestState {
    std::vector<int> parent;
    std::vector<int> deg;

    explicit ForestState(int n) : parent(n), deg(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
};

bool la_backtrack(const Graph& g, int k, size_t e, std::vector<ForestState>& parts, int used) {
    if (e == g.edges().size()) return true;
    auto [u, v] = g.edges()[e];
    int limit = std::min(k, used + 1); // first-use order breaks part symmetry
    for (int p = 0; p < limit; ++p) {
        ForestState& f = parts[p];
        if (f.deg[u] >= 2 || f.deg[v] >= 2) continue;
        int ru = f.find(u), rv = f.find(v);
        if (ru == rv) continue; // would close a cycle
        f.parent[ru] = rv;
        ++f.deg[u];
        ++f.deg[v];
        if (la_backtrack(g, k, e + 1, parts, std::max(used, p + 1))) return true;
        f.parent[ru] = ru;
        --f.deg[u];
        --f.deg[v];
    }
    return false;
}

} // namespace

int linear_arboricity_exact(const Graph& g) {
    int m = g.edge_count();
    if (m > kLinearArboricityMaxEdges)
        throw size_limit_error("linear_arboricity_exact supports m <= " +
                                   std::to_string(kLinearArboricityMaxEdges) + ", got m = " +
                                   std::to_string(m),
                               kLinearArboricityMaxEdges);
    if (m == 0) return 0;
    int n = g.vertex_count();
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    int lo = std::max((max_deg + 1) / 2, n > 1 ? (m + n - 2) / (n - 1) : m);
    for (int k = std::max(lo, 1);; ++k) {
        std::vector<ForestState> parts(k, ForestState(n));
        if (la_backtrack(g, k, 0, parts, 0)) return k;
    }
}

int sigma_lower_la(int la) {
    if (la < 0) throw validation_error("sigma_lower_la: negative input");
    if (la == 0) return 0;
    return (2 * la - 1 + 2) / 3; // smallest s with ceil(3s/2) >= la
}

// ---- strongly balanced separators ----

namespace {

/// Component W-weights of g - S (S given as bitmask).
std::vector<int> component_weights(const Graph& g, uint32_t s_mask, uint32_t w_mask) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<int> weights;
    for (int v = 0; v < n; ++v) {
        if ((s_mask >> v) & 1) continue;
        if (comp[v] >= 0) continue;
        int id = static_cast<int>(weights.size());
        int w = 0;
        std::vector<int> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if ((w_mask >> x) & 1) ++w;
            for (int y : g.neighbors(x)) {
                if ((s_mask >> y) & 1) continue;
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
        weights.push_back(w);
    }
    return weights;
}

/// Can the weights be split into two groups, each summing to at most cap?
bool splittable(const std::vector<int>& weights, int cap) {
    int total = std::accumulate(weights.begin(), weights.end(), 0);
    if (total - cap > cap) return false;
    // subset-sum: reachable sums as a bitset
    uint64_t reach = 1;
    for (int w : weights) reach |= reach << w;
    for (int s = std::max(0, total - cap); s <= cap; ++s)
        if ((reach >> s) & 1) return true;
    return false;
}

} // namespace

int sep_star_exact(const Graph& g, const std::vector<int>& w) {
    int n = g.vertex_count();
    if (n > kSeparatorMaxVertices)
        throw size_limit_error("sep_star_exact supports n <= " +
                                   std::to_string(kSeparatorMaxVertices) + ", got n = " +
                                   std::to_string(n),
                               kSeparatorMaxVertices);
    uint32_t w_mask = 0;
    for (int v : w) {
        if (v < 0 || v >= n) throw validation_error("sep_star_exact: W vertex out of range");
        w_mask |= 1u << v;
    }
    int w_size = std::popcount(w_mask);
    int cap = w_size / 2;

    std::vector<std::vector<uint32_t>> by_size(n + 1);
    for (uint32_t m = 0; m < (1u << n); ++m) by_size[std::popcount(m)].push_back(m);
    for (int size = 0; size <= n; ++size)
        for (uint32_t s_mask : by_size[size]) {
            auto weights = component_weights(g, s_mask, w_mask);
            if (splittable(weights, cap)) return size;
        }
    return n; // unreachable: S = V is always feasible
}

int sigma_lower_sep(const Graph& g, const std::vector<int>& w) {
    return (sep_star_exact(g, w) + 1) / 2;
}

// ---- treewidth ----

int treewidth_exact(const Graph& g) {
    int n = g.vertex_count();
    if (n > kTreewidthMaxVertices)
        throw size_limit_error("treewidth_exact supports n <= " +
                                   std::to_string(kTreewidthMaxVertices) + ", got n = " +
                                   std::to_string(n),
                               kTreewidthMaxVertices);
    if (n == 0) return 0;

    std::vector<uint32_t> adj(n, 0);
    for (auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    // q(S, v): neighbors of v outside S reachable from v through S
    auto q = [&](uint32_t s, int v) {
        uint32_t seen = (1u << v);
        uint32_t frontier = adj[v];
        uint32_t result = adj[v] & ~s & ~(1u << v);
        frontier &= s & ~seen;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            if (seen & (1u << x)) continue;
            seen |= 1u << x;
            result |= adj[x] & ~s & ~(1u << v);
            frontier |= adj[x] & s & ~seen;
        }
        return std::popcount(result);
    };

    // dp over elimination prefixes: dp[S] = min over v in S of
    // max(dp[S \ v], q(S \ v, v))
    std::vector<int8_t> dp(1u << n, 0);
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int best = n;
        for (uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t prev = s & ~(1u << v);
            best = std::min(best, std::max<int>(dp[prev], q(prev, v)));
        }
        dp[s] = static_cast<int8_t>(best);
    }
    return dp[(1u << n) - 1];
}

// ---- closed-form family bounds ----

BoundPair kn_sigma23_bounds(long n) {
    if (n < 3) throw validation_error("kn_sigma23_bounds requires n >= 3");
    return {(n + 7) / 6, (n + 3) / 4};
}

Sigma23Kpq kpq_sigma23_bounds(long p, long q) {
    if (p < 1 || q < 1) throw validation_error("kpq_sigma23_bounds requires p, q >= 1");
    if (p > q) std::swap(p, q); // documented normalization
    if (q > p * (p - 1)) {
        long e = (p + 1) / 2;
        return {e, e, true};
    }
    long den = 2 * p + 2 * q - 4; // > 0 here: p = q = 1 took the exact branch
    return {(p * q + den - 1) / den, p, false};
}

BoundPair kn_sigma13_bounds(long n) {
    if (n < 1) throw validation_error("kn_sigma13_bounds requires n >= 1");
    return {n * n / 8, (n * n + 5 * n + 6) / 6};
}

BoundPair kpq_sigma13_bounds(long p, long q) {
    if (p < 1 || q < 1) throw validation_error("kpq_sigma13_bounds requires p, q >= 1");
    if (p > q) std::swap(p, q);
    return {(p * q + 3) / 4, ((p + 1) / 2) * ((q + 1) / 2)};
}

// ---- aggregation ----

FamilyDescriptor parse_family(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw validation_error("family descriptor must look like kind:params, got " + descriptor);
    std::string kind = descriptor.substr(0, colon);
    std::string params = descriptor.substr(colon + 1);
    FamilyDescriptor fam;
    try {
        if (kind == "platonic") {
            fam.kind = FamilyDescriptor::Kind::platonic_solid;
            if (!platonic_from_name(params)) throw validation_error("unknown platonic solid: " + params);
            fam.platonic = params;
        } else if (kind == "complete") {
            fam.kind = FamilyDescriptor::Kind::complete;
            fam.a = std::stol(params);
        } else if (kind == "bipartite") {
            fam.kind = FamilyDescriptor::Kind::bipartite;
            auto x = params.find('x');
            if (x == std::string::npos) throw validation_error("bipartite wants p x q: " + descriptor);
            fam.a = std::stol(params.substr(0, x));
            fam.b = std::stol(params.substr(x + 1));
        } else if (kind == "nested-tri") {
            fam.kind = FamilyDescriptor::Kind::nested_tri;
            fam.a = std::stol(params);
        } else {
            throw validation_error("unknown family kind: " + kind);
        }
    } catch (const std::invalid_argument&) {
        throw validation_error("bad family parameters in " + descriptor);
    }
    return fam;
}

Graph family_graph(const FamilyDescriptor& fam) {
    switch (fam.kind) {
        case FamilyDescriptor::Kind::platonic_solid: return platonic(fam.platonic).graph;
        case FamilyDescriptor::Kind::complete: return complete(static_cast<int>(fam.a));
        case FamilyDescriptor::Kind::bipartite:
            return complete_bipartite(static_cast<int>(fam.a), static_cast<int>(fam.b));
        case FamilyDescriptor::Kind::nested_tri:
            return nested_triangulation(static_cast<int>(fam.a)).graph;
        case FamilyDescriptor::Kind::custom: break;
    }
    throw validation_error("family has no generator");
}

namespace {

struct Interval {
    std::optional<long> lower;
    std::optional<long> upper;
};

struct Aggregator {
    std::array<Interval, 8> box;
    std::array<std::vector<ProvenanceEntry>, 8> notes;

    static int idx(Quantity q) { return static_cast<int>(q); }

    void add_lower(Quantity q, long v, const std::string& rule) {
        auto& iv = box[idx(q)];
        if (!iv.lower || v > *iv.lower) iv.lower = v;
        notes[idx(q)].push_back({rule, v});
    }
    void add_upper(Quantity q, long v, const std::string& rule) {
        auto& iv = box[idx(q)];
        if (!iv.upper || v < *iv.upper) iv.upper = v;
        notes[idx(q)].push_back({rule, v});
    }

    /// Propagate along x <= y: lower bounds flow x -> y, upper bounds y -> x.
    void chain(Quantity x, Quantity y, const std::string& label) {
        auto& bx = box[idx(x)];
        auto& by = box[idx(y)];
        if (bx.lower && (!by.lower || *bx.lower > *by.lower)) {
            by.lower = *bx.lower;
            notes[idx(y)].push_back({"chain:" + label, *bx.lower});
        }
        if (by.upper && (!bx.upper || *by.upper < *bx.upper)) {
            bx.upper = *by.upper;
            notes[idx(x)].push_back({"chain:" + label, *by.upper});
        }
    }
};

const char* kFixtureSegTable = "fixture:seg-table(platonic)";
const char* kFixtureArcTable = "fixture:arc-table(platonic)";
const char* kFixtureSigmaDrawing = "fixture:circle-drawing-table(platonic)";
const char* kFixtureRhoTable = "fixture:line-cover-table(platonic)";

struct PlatonicFixture {
    long seg, arc, sigma12; // exact table values
    long rho_lo, rho_hi;    // rho12 = rho13 range
};

const std::map<std::string, PlatonicFixture>& platonic_fixtures() {
    static const std::map<std::string, PlatonicFixture> table = {
        {"tetrahedron", {6, 3, 3, 6, 6}},  {"octahedron", {9, 3, 3, 9, 9}},
        {"cube", {7, 4, 4, 7, 7}},         {"dodecahedron", {13, 10, 5, 9, 10}},
        {"icosahedron", {15, 7, 7, 13, 15}},
    };
    return table;
}

BoundReport run_aggregate(const Graph& g, const FamilyDescriptor* fam, Quantity want,
                          RuleOptions opts) {
    Aggregator agg;
    long n = g.vertex_count();
    long m = g.edge_count();

    if (fam) {
        switch (fam->kind) {
            case FamilyDescriptor::Kind::platonic_solid:
            case FamilyDescriptor::Kind::nested_tri:
                opts.planar = true;
                break;
            case FamilyDescriptor::Kind::complete:
                opts.planar = fam->a <= 4;
                break;
            case FamilyDescriptor::Kind::bipartite:
                opts.planar = std::min(fam->a, fam->b) <= 2;
                break;
            case FamilyDescriptor::Kind::custom: break;
        }
    }

    if (m == 0) {
        // a drawing of isolated vertices fits on a single circle
        long v = n > 0 ? 1 : 0;
        BoundReport r{want, v, v, {{"trivial:edgeless", v}}};
        return r;
    }

    // every nonempty graph needs at least one cover object
    for (Quantity q : {Quantity::sigma13, Quantity::sigma23, Quantity::rho13, Quantity::rho23})
        agg.add_lower(q, 1, "trivial:nonempty");
    if (opts.planar)
        for (Quantity q : {Quantity::sigma12, Quantity::rho12, Quantity::seg, Quantity::arc})
            agg.add_lower(q, 1, "trivial:nonempty");

    // combinatorial lower bounds for sigma^1_d (any d)
    long deg_lb = sigma_lower_degree(g);
    agg.add_lower(Quantity::sigma13, deg_lb, "degree-lower");
    if (opts.planar) agg.add_lower(Quantity::sigma12, deg_lb, "degree-lower");
    if (m >= n) {
        long den_lb = sigma_lower_density(n, m);
        agg.add_lower(Quantity::sigma13, den_lb, "density-lower");
        if (opts.planar) agg.add_lower(Quantity::sigma12, den_lb, "density-lower");
    }

    if (opts.use_oracles) {
        if (n <= kBisectionMaxVertices) {
            long v = sigma_lower_bisection(g);
            agg.add_lower(Quantity::sigma13, v, "bisection-lower");
            if (opts.planar) agg.add_lower(Quantity::sigma12, v, "bisection-lower");
        }
        if (m <= kLinearArboricityMaxEdges) {
            long v = sigma_lower_la(linear_arboricity_exact(g));
            agg.add_lower(Quantity::sigma13, v, "linear-arboricity-lower");
            if (opts.planar) agg.add_lower(Quantity::sigma12, v, "linear-arboricity-lower");
        }
        if (n <= kSeparatorMaxVertices) {
            std::vector<int> w(n);
            std::iota(w.begin(), w.end(), 0);
            long v = sigma_lower_sep(g, w);
            agg.add_lower(Quantity::sigma13, v, "separator-lower");
            if (opts.planar) agg.add_lower(Quantity::sigma12, v, "separator-lower");
        }
        if (n <= kTreewidthMaxVertices) {
            long v = (treewidth_exact(g) + 5) / 6;
            agg.add_lower(Quantity::sigma13, v, "treewidth-lower");
            if (opts.planar) agg.add_lower(Quantity::sigma12, v, "treewidth-lower");
        }
    }

    // one line (circle) per edge
    agg.add_upper(Quantity::sigma13, m, "trivial:edge-count");
    agg.add_upper(Quantity::rho13, m, "trivial:edge-count");
    if (opts.planar) {
        agg.add_upper(Quantity::sigma12, m, "trivial:edge-count");
        agg.add_upper(Quantity::rho12, m, "trivial:edge-count");
        agg.add_upper(Quantity::seg, m, "trivial:edge-count");
        agg.add_upper(Quantity::arc, m, "trivial:edge-count");
        // a planar drawing fits on one plane / one sphere
        agg.add_upper(Quantity::rho23, 1, "planar:single-plane");
        agg.add_upper(Quantity::sigma23, 1, "planar:single-sphere");
    }
    // any n-vertex graph: sigma23 <= ceil(n/4)
    agg.add_upper(Quantity::sigma23, (n + 3) / 4, "sigma23-upper:ceil(n/4)");

    if (fam && opts.use_fixtures) {
        if (fam->kind == FamilyDescriptor::Kind::platonic_solid) {
            const auto& fx = platonic_fixtures().at(fam->platonic);
            agg.add_lower(Quantity::seg, fx.seg, kFixtureSegTable);
            agg.add_upper(Quantity::seg, fx.seg, kFixtureSegTable);
            agg.add_lower(Quantity::arc, fx.arc, kFixtureArcTable);
            agg.add_upper(Quantity::arc, fx.arc, kFixtureArcTable);
            agg.add_upper(Quantity::sigma12, fx.sigma12, kFixtureSigmaDrawing);
            agg.add_lower(Quantity::rho12, fx.rho_lo, kFixtureRhoTable);
            agg.add_upper(Quantity::rho12, fx.rho_hi, kFixtureRhoTable);
            agg.add_lower(Quantity::rho13, fx.rho_lo, kFixtureRhoTable);
            agg.add_upper(Quantity::rho13, fx.rho_hi, kFixtureRhoTable);
        }
        if (fam->kind == FamilyDescriptor::Kind::complete && fam->a >= 3) {
            auto s23 = kn_sigma23_bounds(fam->a);
            agg.add_lower(Quantity::sigma23, s23.lower, "fixture:theta(K_n)>=floor((n+7)/6) [Duncan]");
            agg.add_upper(Quantity::sigma23, s23.upper,
                          "fixture:bt(K_n)=ceil(n/2) via hemispheres [Bernhart-Kainen]");
            auto s13 = kn_sigma13_bounds(fam->a);
            agg.add_lower(Quantity::sigma13, s13.lower, "bisection-lower:bw(K_n)=floor(n^2/4)");
            agg.add_upper(Quantity::sigma13, s13.upper, "fixture:steiner-triple-partition upper");
            // rho values of K_n from the literature table
            agg.add_lower(Quantity::rho13, fam->a * (fam->a - 1) / 2, "fixture:rho13(K_n)=C(n,2)");
            agg.add_upper(Quantity::rho13, fam->a * (fam->a - 1) / 2, "fixture:rho13(K_n)=C(n,2)");
            agg.add_lower(Quantity::rho23, (fam->a * fam->a - fam->a + 11) / 12,
                          "fixture:rho23(K_n) lower");
            agg.add_upper(Quantity::rho23, (fam->a * fam->a + 5 * fam->a + 6) / 6,
                          "fixture:rho23(K_n) upper");
        }
        if (fam->kind == FamilyDescriptor::Kind::bipartite) {
            long p = std::min(fam->a, fam->b), q = std::max(fam->a, fam->b);
            auto s23 = kpq_sigma23_bounds(p, q);
            agg.add_lower(Quantity::sigma23, s23.lower,
                          "fixture:theta(K_pq)>=pq/(2p+2q-4) [Harary]");
            agg.add_upper(Quantity::sigma23, s23.upper, "kpq-sigma23-upper");
            agg.add_upper(Quantity::sigma23, (p + 1) / 2,
                          "fixture:bt(K_pq)<=min(p,q) via hemispheres [Bernhart-Kainen]");
            auto s13 = kpq_sigma13_bounds(p, q);
            agg.add_lower(Quantity::sigma13, s13.lower, "bisection-lower:bw(K_pq)=ceil(pq/2)");
            agg.add_upper(Quantity::sigma13, s13.upper, "kpq-circle-construction-upper");
        }
    }

    // inequality chains; iterate to a fixpoint (the graph is tiny)
    for (int round = 0; round < 8; ++round) {
        if (opts.planar) {
            agg.chain(Quantity::sigma13, Quantity::sigma12, "sigma13<=sigma12");
            agg.chain(Quantity::sigma12, Quantity::rho12, "sigma12<=rho12");
            agg.chain(Quantity::sigma12, Quantity::arc, "sigma12<=arc");
            agg.chain(Quantity::arc, Quantity::seg, "arc<=seg");
            agg.chain(Quantity::rho12, Quantity::seg, "rho12<=seg");
            agg.chain(Quantity::rho13, Quantity::rho12, "rho13<=rho12");
        }
        agg.chain(Quantity::rho23, Quantity::sigma13, "rho23<=sigma13");
        agg.chain(Quantity::sigma13, Quantity::rho13, "sigma13<=rho13");
        agg.chain(Quantity::sigma23, Quantity::rho23, "sigma23<=rho23");
    }

    const auto& iv = agg.box[Aggregator::idx(want)];
    if (iv.lower && iv.upper && *iv.lower > *iv.upper)
        throw integrity_error("contradictory bounds for " + quantity_name(want) + ": lower " +
                              std::to_string(*iv.lower) + " > upper " + std::to_string(*iv.upper));
    BoundReport report{want, iv.lower, iv.upper, agg.notes[Aggregator::idx(want)]};
    return report;
}

} // namespace

BoundReport aggregate_bounds(const FamilyDescriptor& fam, Quantity q, const RuleOptions& opts) {
    Graph g = family_graph(fam);
    return run_aggregate(g, &fam, q, opts);
}

BoundReport aggregate_bounds(const Graph& g, Quantity q, const RuleOptions& opts) {
    return run_aggregate(g, nullptr, q, opts);
}

} // namespace arccover
