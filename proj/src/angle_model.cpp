#include "arccover/angle_model.hpp"

#include "arccover/errors.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <sstream>

namespace arccover {

bool is_three_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    if (!g.connected()) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<char> seen(n, 0);
            seen[a] = seen[b] = 1;
            int start = 0;
            while (start == a || start == b) ++start;
            std::vector<int> stack{start};
            seen[start] = 1;
            int count = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.neighbors(v))
                    if (!seen[u]) {
                        seen[u] = 1;
                        ++count;
                        stack.push_back(u);
                    }
            }
            if (count != n - 2) return false;
        }
    return true;
}

AngleModel::AngleModel(const EmbeddedGraph& embedding, const Rational& eps) : eps_(eps) {
    if (eps.sign() < 0 || eps >= Rational(1))
        throw validation_error("angle model eps must lie in [0, 1)");
    const Graph& g = embedding.graph;
    auto faces = trace_faces_checked(embedding);
    vertex_count_ = g.vertex_count();
    edge_count_ = g.edge_count();
    face_count_ = static_cast<int>(faces.size());
    outer_face_ = embedding.outer_face;
    outer_degree_ = faces[embedding.outer_face].degree();
    three_connected_ = is_three_connected(g);
    for (const Face& f : faces) face_degrees_.push_back(f.degree());
    for (int v = 0; v < vertex_count_; ++v) vertex_degrees_.push_back(g.degree(v));

    // model consistency: sum of vertex equation rhs == sum of face rhs
    long vertex_rhs = 2L * vertex_count_;
    long face_rhs = 0;
    for (int f = 0; f < face_count_; ++f)
        face_rhs += f == embedding.outer_face ? faces[f].degree() + 2 : faces[f].degree() - 2;
    if (vertex_rhs != face_rhs)
        throw integrity_error("vertex/face equation totals disagree (Euler mismatch)");

    // face of each directed edge
    std::map<std::pair<int, int>, int> face_of;
    for (int f = 0; f < face_count_; ++f)
        for (auto& de : faces[f].walk) face_of[de] = f;

    // anchored clockwise neighbor lists: start at the lowest neighbor id
    std::vector<std::vector<int>> anchored(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) {
        const auto& rot = embedding.rotation.order[v];
        int k = static_cast<int>(rot.size());
        int at = static_cast<int>(std::min_element(rot.begin(), rot.end()) - rot.begin());
        for (int t = 0; t < k; ++t) anchored[v].push_back(rot[(at + t) % k]);
    }

    // corner variables; corner (v, t) spans clockwise from anchored[t] to
    // anchored[t+1] and lies in the face of directed edge v -> anchored[t+1]
    std::vector<std::vector<int>> corner_id(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) {
        int k = static_cast<int>(anchored[v].size());
        for (int t = 0; t < k; ++t) {
            int next = anchored[v][(t + 1) % k];
            int face = face_of.at({v, next});
            corners_.push_back({v, t, face});
            corner_id[v].push_back(static_cast<int>(corners_.size()) - 1);
            outer_corner_.push_back(face == embedding.outer_face ? 1 : 0);
        }
    }

    // pair variables with substituted corner sums
    for (int v = 0; v < vertex_count_; ++v) {
        int k = static_cast<int>(anchored[v].size());
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                AnglePair p{v, i, j, {}};
                for (int t = i; t <= j - 1; ++t) p.corners.push_back(corner_id[v][t - 1]);
                pairs_.push_back(std::move(p));
            }
    }

    // solver form
    Rational two_minus_eps = Rational(2) - eps_;
    for (size_t c = 0; c < corners_.size(); ++c) lp_.add_var(eps_, two_minus_eps, Rational(0));
    for (size_t p = 0; p < pairs_.size(); ++p) lp_.add_var(Rational(0), Rational(1), Rational(1));

    for (int v = 0; v < vertex_count_; ++v) {
        std::vector<std::pair<int, Rational>> terms;
        for (int c : corner_id[v]) terms.emplace_back(c, Rational(1));
        lp_.add_eq(std::move(terms), Rational(2));
    }
    for (int f = 0; f < face_count_; ++f) {
        std::vector<std::pair<int, Rational>> terms;
        for (size_t c = 0; c < corners_.size(); ++c)
            if (corners_[c].face == f) terms.emplace_back(static_cast<int>(c), Rational(1));
        long rhs = f == embedding.outer_face ? faces[f].degree() + 2 : faces[f].degree() - 2;
        lp_.add_eq(std::move(terms), Rational(rhs));
    }
    for (size_t p = 0; p < pairs_.size(); ++p) {
        int s = static_cast<int>(corners_.size() + p);
        std::vector<std::pair<int, Rational>> up{{s, Rational(1)}};
        std::vector<std::pair<int, Rational>> dn{{s, Rational(1)}};
        for (int c : pairs_[p].corners) {
            up.emplace_back(c, Rational(-1)); // s - y <= 0
            dn.emplace_back(c, Rational(1));  // s + y <= 2
        }
        lp_.add_le(std::move(up), Rational(0));
        lp_.add_le(std::move(dn), Rational(2));
    }

    // full row inventory: equations, two rows per pair, two domain rows per
    // corner, and the outer-face corner caps carried as their own rows
    constraint_count_ = vertex_count_ + face_count_ + 2 * pair_count() + 2 * corner_count() +
                        outer_degree_;
}

namespace {

std::string rational_decimal(const Rational& r) {
    if (r.is_integer()) return r.num().get_str();
    // require a terminating decimal expansion
    mpz_class den = r.den();
    int tens = 0;
    mpz_class d = den;
    while (d % 2 == 0) d /= 2, ++tens;
    int fives = 0;
    while (d % 5 == 0) d /= 5, ++fives;
    if (d != 1)
        throw validation_error("LP export needs a terminating decimal bound, got " + r.str());
    int digits = std::max(tens, fives);
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class num = r.num() * (scale / den);
    bool neg = num < 0;
    if (neg) num = -num;
    std::string s = num.get_str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

} // namespace

std::string AngleModel::export_lp_format() const {
    std::ostringstream out;
    auto xname = [&](int c) {
        return "x_" + std::to_string(corners_[c].vertex) + "_" + std::to_string(corners_[c].slot);
    };
    auto sname = [&](int p) {
        const auto& pr = pairs_[p];
        return "s_" + std::to_string(pr.vertex) + "_" + std::to_string(pr.i) + "_" +
               std::to_string(pr.j);
    };
    out << "Maximize\n obj:";
    for (int p = 0; p < pair_count(); ++p) out << (p ? " + " : " ") << sname(p);
    out << "\nSubject To\n";
    int row = 0;
    const auto& rows = lp_.rows();
    // equations and pair inequalities straight from the solver form
    for (const auto& r : rows) {
        out << " c" << row++ << ":";
        bool first = true;
        for (auto& [j, a] : r.terms) {
            std::string name = j < corner_count() ? xname(j) : sname(j - corner_count());
            if (a == Rational(1))
                out << (first ? " " : " + ") << name;
            else if (a == Rational(-1))
                out << (first ? " - " : " - ") << name;
            else
                out << (first ? " " : " + ") << rational_decimal(a) << " " << name;
            first = false;
        }
        out << (r.is_eq ? " = " : " <= ") << rational_decimal(r.rhs) << "\n";
    }
    // corner domain rows
    std::string lo = rational_decimal(eps_);
    std::string hi = rational_decimal(Rational(2) - eps_);
    for (int c = 0; c < corner_count(); ++c)
        out << " c" << row++ << ": " << xname(c) << " >= " << lo << "\n";
    for (int c = 0; c < corner_count(); ++c)
        out << " c" << row++ << ": " << xname(c) << " <= " << hi << "\n";
    // outer-face corner caps carried as their own rows
    for (int c = 0; c < corner_count(); ++c)
        if (outer_corner_[c]) out << " c" << row++ << ": " << xname(c) << " <= " << hi << "\n";
    out << "Bounds\n";
    for (int p = 0; p < pair_count(); ++p) out << " 0 <= " << sname(p) << " <= 1\n";
    out << "Binaries\n";
    for (int p = 0; p < pair_count(); ++p) out << " " << sname(p) << "\n";
    out << "End\n";
    return out.str();
}

LpResult solve_relaxation(const AngleModel& model) { return solve_lp(model.relaxation()); }

namespace {

/// Pair ids forced to zero in every strictly positive assignment:
/// a single-corner angle inside a face of degree 3 stays below pi, and
/// the complement of an all-but-wrap span stays above pi whenever the
/// wrap corner lies in a triangle.
std::vector<char> strictly_zero_pairs(const AngleModel& model) {
    std::vector<char> zero(model.pairs().size(), 0);
    const auto& corners = model.corners();
    for (size_t p = 0; p < model.pairs().size(); ++p) {
        const AnglePair& pr = model.pairs()[p];
        int deg = model.vertex_degree(pr.vertex);
        auto inner_triangle = [&](int corner_id) {
            int f = corners[corner_id].face;
            return f != model.outer_face() && model.face_degrees()[f] == 3;
        };
        if (pr.j == pr.i + 1 && inner_triangle(pr.corners.front())) zero[p] = 1;
        if (pr.i == 1 && pr.j == deg) {
            // y = 2 - x_wrap; the wrap corner is the last slot
            int wrap = pr.corners.front() - (pr.i - 1) + (deg - 1);
            if (inner_triangle(wrap)) zero[p] = 1;
        }
    }
    return zero;
}

/// Exact strict-feasibility test: do the vertex/face equations together
/// with y_p = 1 for p in S admit corner values with a positive margin to
/// the open bounds?  (Corners at degree-1 vertices may sit at 2.)
bool strictly_feasible(const AngleModel& model, const std::vector<char>& active) {
    LinearProgram lp;
    int nc = model.corner_count();
    for (int c = 0; c < nc; ++c) lp.add_var(Rational(0), Rational(2), Rational(0));
    int t = lp.add_var(Rational(0), Rational(1), Rational(1));

    // vertex and face equations (the model's eq rows touch corners only)
    for (const auto& row : model.relaxation().rows())
        if (row.is_eq) lp.add_eq(row.terms, row.rhs);

    for (size_t p = 0; p < active.size(); ++p) {
        if (!active[p]) continue;
        std::vector<std::pair<int, Rational>> terms;
        for (int c : model.pairs()[p].corners) terms.emplace_back(c, Rational(1));
        lp.add_eq(std::move(terms), Rational(1));
    }
    for (int c = 0; c < nc; ++c) {
        lp.add_le({{t, Rational(1)}, {c, Rational(-1)}}, Rational(0)); // t <= x
        if (model.vertex_degree(model.corners()[c].vertex) >= 2)
            lp.add_le({{t, Rational(1)}, {c, Rational(1)}}, Rational(2)); // x <= 2 - t
    }
    LpResult res = solve_lp(lp);
    return res.status == LpStatus::optimal && res.objective.sign() > 0;
}

/// Corner values of a strictly interior witness for the active set.
std::vector<Rational> interior_witness(const AngleModel& model, const std::vector<char>& active) {
    LinearProgram lp;
    int nc = model.corner_count();
    for (int c = 0; c < nc; ++c) lp.add_var(Rational(0), Rational(2), Rational(0));
    int t = lp.add_var(Rational(0), Rational(1), Rational(1));
    const auto& rows = model.relaxation().rows();
    for (const auto& row : rows)
        if (row.is_eq) lp.add_eq(row.terms, row.rhs);
    for (size_t p = 0; p < active.size(); ++p) {
        if (!active[p]) continue;
        std::vector<std::pair<int, Rational>> terms;
        for (int c : model.pairs()[p].corners) terms.emplace_back(c, Rational(1));
        lp.add_eq(std::move(terms), Rational(1));
    }
    for (int c = 0; c < nc; ++c) {
        lp.add_le({{t, Rational(1)}, {c, Rational(-1)}}, Rational(0));
        if (model.vertex_degree(model.corners()[c].vertex) >= 2)
            lp.add_le({{t, Rational(1)}, {c, Rational(1)}}, Rational(2));
    }
    LpResult res = solve_lp(lp);
    res.values.resize(nc);
    return res.values;
}

/// Closed relaxation plus inequalities valid for strictly positive
/// assignments: per-vertex caps (at most floor(deg/2) unit differences
/// among strictly increasing angle prefixes) and mutual exclusion of
/// nested spans (nested strict prefixes cannot both differ by one).
LinearProgram strengthened_lp(const AngleModel& model, const std::vector<char>& zero) {
    LinearProgram lp;
    const auto& plain = model.relaxation();
    for (int j = 0; j < plain.var_count(); ++j) {
        bool fixed = j >= model.corner_count() && zero[j - model.corner_count()];
        lp.add_var(plain.lo(j), fixed ? Rational(0) : plain.hi(j), plain.costs()[j]);
    }
    for (const auto& row : plain.rows()) {
        if (row.is_eq)
            lp.add_eq(row.terms, row.rhs);
        else
            lp.add_le(row.terms, row.rhs);
    }
    // group pair ids by vertex
    std::vector<std::vector<int>> at_vertex(model.vertex_count());
    for (int p = 0; p < model.pair_count(); ++p)
        if (!zero[p]) at_vertex[model.pairs()[p].vertex].push_back(p);
    for (int v = 0; v < model.vertex_count(); ++v) {
        if (at_vertex[v].empty()) continue;
        std::vector<std::pair<int, Rational>> cap;
        for (int p : at_vertex[v]) cap.emplace_back(model.s_var(p), Rational(1));
        lp.add_le(std::move(cap), Rational(model.vertex_degree(v) / 2));
        for (size_t a = 0; a < at_vertex[v].size(); ++a)
            for (size_t b = a + 1; b < at_vertex[v].size(); ++b) {
                const AnglePair& pa = model.pairs()[at_vertex[v][a]];
                const AnglePair& pb = model.pairs()[at_vertex[v][b]];
                bool a_in_b = pa.i >= pb.i && pa.j <= pb.j;
                bool b_in_a = pb.i >= pa.i && pb.j <= pa.j;
                if (a_in_b || b_in_a) // spans are distinct by construction
                    lp.add_le({{model.s_var(at_vertex[v][a]), Rational(1)},
                               {model.s_var(at_vertex[v][b]), Rational(1)}},
                              Rational(1));
            }
    }
    return lp;
}

} // namespace

MipResult solve_mip(const AngleModel& model, const MipBudget& budget) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - t0).count(); };

    MipResult result;
    const bool open_mode = model.eps().is_zero();
    std::vector<char> zero(model.pair_count(), 0);
    if (open_mode) zero = strictly_zero_pairs(model);
    LinearProgram lp = open_mode ? strengthened_lp(model, zero) : model.relaxation();

    Simplex simplex(lp);
    LpStatus st = simplex.solve_primal();
    if (st != LpStatus::optimal) {
        // eps modes can cut the whole polytope away
        result.optimal = st == LpStatus::infeasible;
        result.ang_pi_upper = 0;
        result.wall_seconds = elapsed();
        return result;
    }
    result.lp_relaxation = simplex.objective();

    int ns = model.pair_count();
    int base = model.corner_count();

    struct Node {
        std::vector<std::pair<int, int>> fixings; // (pair id, forced value)
        Rational bound;
        long serial;
    };
    std::vector<Node> open;
    long serial = 0;
    open.push_back({{}, result.lp_relaxation, serial++});

    std::vector<std::pair<int, int>> current;
    long best = -1;
    std::vector<Rational> best_corners, best_s;

    auto apply_fixings = [&](const std::vector<std::pair<int, int>>& target) {
        for (auto& [p, val] : current) {
            bool keep = false;
            for (auto& [tp, tv] : target)
                if (tp == p && tv == val) keep = true;
            if (!keep)
                simplex.change_bounds(model.s_var(p), Rational(0),
                                      zero[p] ? Rational(0) : Rational(1));
        }
        for (auto& [p, val] : target)
            simplex.change_bounds(model.s_var(p), Rational(val), Rational(val));
        current = target;
    };

    bool out_of_budget = false;
    bool at_root = true;
    while (!open.empty()) {
        if (result.node_count >= budget.max_nodes ||
            (budget.max_seconds > 0 && elapsed() > budget.max_seconds)) {
            out_of_budget = true;
            break;
        }
        // dive onto the newest child; when the dive ends, jump to the
        // open node with the best bound
        size_t pick = open.size() - 1;
        if (open.back().serial != serial - 1)
            for (size_t i = 0; i < open.size(); ++i)
                if (open[i].bound > open[pick].bound) pick = i;
        Node node = std::move(open[pick]);
        open.erase(open.begin() + static_cast<long>(pick));

        if (best >= 0 && node.bound.floor() <= best) continue;

        apply_fixings(node.fixings);
        LpStatus status = at_root ? LpStatus::optimal : simplex.reoptimize_dual();
        at_root = false;
        ++result.node_count;
        if (status == LpStatus::infeasible) continue;
        if (status != LpStatus::optimal)
            throw integrity_error("node LP neither optimal nor infeasible");

        Rational obj = simplex.objective();
        if (best >= 0 && obj.floor() <= best) continue;

        int branch = -1;
        Rational best_dist(1);
        Rational half(1, 2);
        std::vector<Rational> svals(ns);
        bool integral = true;
        for (int p = 0; p < ns; ++p) {
            svals[p] = simplex.value(model.s_var(p));
            if (!svals[p].is_integer()) {
                integral = false;
                Rational frac_dist = abs(svals[p] - half);
                if (branch < 0 || frac_dist < best_dist) {
                    branch = p;
                    best_dist = frac_dist;
                }
            }
        }

        if (integral) {
            long value = obj.floor().get_si();
            std::vector<char> active(ns, 0);
            for (int p = 0; p < ns; ++p) active[p] = svals[p] == Rational(1);
            bool accept = true;
            if (open_mode) accept = strictly_feasible(model, active);
            if (accept) {
                if (value > best) {
                    best = value;
                    best_s = svals;
                    if (open_mode) {
                        best_corners = interior_witness(model, active);
                    } else {
                        best_corners.clear();
                        for (int c = 0; c < base; ++c) best_corners.push_back(simplex.value(c));
                    }
                    result.found_incumbent = true;
                }
                continue;
            }
            // the LP point is only weakly feasible: if even the forced-on
            // core fails the margin test, nothing below this node counts
            std::vector<char> core(ns, 0);
            for (auto& [p, val] : node.fixings)
                if (val == 1) core[p] = 1;
            if (!strictly_feasible(model, core)) continue;
            // otherwise branch on a free claimed pair to split the claim
            for (int p = 0; p < ns && branch < 0; ++p) {
                if (!active[p]) continue;
                bool is_fixed = false;
                for (auto& [q, val] : node.fixings) is_fixed |= q == p;
                if (!is_fixed) branch = p;
            }
            if (branch < 0) continue; // nothing free is claimed; core was the set
            Node with_claim{node.fixings, obj, serial++};
            with_claim.fixings.emplace_back(branch, 1);
            Node without_claim{std::move(node.fixings), obj, serial++};
            without_claim.fixings.emplace_back(branch, 0);
            open.push_back(std::move(with_claim));
            open.push_back(std::move(without_claim)); // try dropping the claim first
            continue;
        }

        // dive toward the nearer integer; ties take the 1-branch first
        int first_val = svals[branch] >= half ? 1 : 0;
        Node other{node.fixings, obj, serial++};
        other.fixings.emplace_back(branch, 1 - first_val);
        Node dive{std::move(node.fixings), obj, serial++};
        dive.fixings.emplace_back(branch, first_val);
        open.push_back(std::move(other));
        open.push_back(std::move(dive)); // newest = processed next
    }

    result.wall_seconds = elapsed();
    result.optimal = !out_of_budget;
    result.ang_pi_upper = std::max<long>(best, 0);
    result.corner_values = std::move(best_corners);
    result.s_values = std::move(best_s);
    return result;
}

SegmentBound segment_lower_bound(const EmbeddedGraph& embedding, const MipBudget& budget) {
    AngleModel model(embedding);
    MipResult mip = solve_mip(model, budget);
    return {embedding.graph.edge_count() - mip.ang_pi_upper, std::move(mip)};
}

} // namespace arccover
