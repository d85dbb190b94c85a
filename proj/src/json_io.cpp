#include "arccover/json_io.hpp"

#include "arccover/errors.hpp"

#include <json.hpp>

namespace arccover {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io_error(std::string("JSON parse error: ") + e.what());
    }
}

json graph_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.meta.empty()) j["meta"] = g.meta;
    return j;
}

Graph graph_from(const json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw io_error("graph JSON needs n and edges");
    Graph g(j.at("n").get<int>());
    for (auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("meta"))
        for (auto& [k, v] : j.at("meta").items()) g.meta[k] = v.get<std::string>();
    return g;
}

} // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(2) + "\n"; }

std::string embedded_to_json(const EmbeddedGraph& eg) {
    json j = graph_json(eg.graph);
    j["rotation"] = eg.rotation.order;
    j["outer_face"] = eg.outer_face;
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) { return graph_from(parse(text)); }

bool json_has_rotation(const std::string& text) { return parse(text).contains("rotation"); }

EmbeddedGraph embedded_from_json(const std::string& text) {
    json j = parse(text);
    EmbeddedGraph eg;
    eg.graph = graph_from(j);
    if (!j.contains("rotation")) throw io_error("graph JSON lacks a rotation system");
    eg.rotation.order = j.at("rotation").get<std::vector<std::vector<int>>>();
    eg.outer_face = j.value("outer_face", 0);
    return eg;
}

std::string drawing_to_json(const Drawing& d) {
    json j;
    j["dim"] = d.dim;
    j["graph"] = graph_json(d.graph);
    json verts = json::array();
    for (auto& v : d.vertices) {
        if (d.dim == 2)
            verts.push_back({v[0], v[1]});
        else
            verts.push_back({v[0], v[1], v[2]});
    }
    j["vertices"] = std::move(verts);
    json sup = json::array();
    for (const Support& s : d.supports) {
        json e;
        switch (s.kind) {
            case Support::Kind::circle:
                e["kind"] = "circle";
                e["center"] = {s.flat.center.x, s.flat.center.y};
                e["radius"] = s.flat.radius;
                break;
            case Support::Kind::line:
                e["kind"] = "line";
                e["point"] = {s.flat.point.x, s.flat.point.y};
                e["dir"] = {s.flat.dir.x, s.flat.dir.y};
                break;
            case Support::Kind::circle3:
                e["kind"] = "circle3";
                e["center"] = {s.space.center.x, s.space.center.y, s.space.center.z};
                e["radius"] = s.space.radius;
                e["normal"] = {s.space.normal.x, s.space.normal.y, s.space.normal.z};
                if (s.space.carrier_sphere >= 0) e["sphere"] = s.space.carrier_sphere;
                break;
            case Support::Kind::sphere:
                e["kind"] = "sphere";
                e["center"] = {s.ball.center.x, s.ball.center.y, s.ball.center.z};
                e["radius"] = s.ball.radius;
                break;
        }
        sup.push_back(std::move(e));
    }
    j["supports"] = std::move(sup);
    json arcs = json::array();
    for (const Arc& a : d.arcs) {
        json e;
        e["support"] = a.support;
        if (a.full) {
            e["full"] = true;
        } else {
            e["edge"] = {a.u, a.v};
            e["sweep"] = {{"start", a.start}, {"delta", a.delta}};
        }
        arcs.push_back(std::move(e));
    }
    j["arcs"] = std::move(arcs);
    return j.dump(2) + "\n";
}

Drawing drawing_from_json(const std::string& text) {
    json j = parse(text);
    Drawing d;
    d.dim = j.value("dim", 2);
    if (d.dim != 2 && d.dim != 3) throw io_error("drawing dim must be 2 or 3");
    d.graph = graph_from(j.at("graph"));
    for (auto& v : j.at("vertices")) {
        std::array<double, 3> p{0, 0, 0};
        for (size_t i = 0; i < v.size() && i < 3; ++i) p[i] = v.at(i).get<double>();
        d.vertices.push_back(p);
    }
    if (static_cast<int>(d.vertices.size()) != d.graph.vertex_count())
        throw io_error("vertex coordinate count does not match the graph");
    for (auto& e : j.at("supports")) {
        std::string kind = e.at("kind").get<std::string>();
        if (kind == "circle") {
            d.supports.push_back(Support::circle(
                {e.at("center").at(0).get<double>(), e.at("center").at(1).get<double>()},
                e.at("radius").get<double>()));
        } else if (kind == "line") {
            d.supports.push_back(Support::line(
                {e.at("point").at(0).get<double>(), e.at("point").at(1).get<double>()},
                {e.at("dir").at(0).get<double>(), e.at("dir").at(1).get<double>()}));
        } else if (kind == "circle3") {
            Circle3 c;
            c.center = {e.at("center").at(0).get<double>(), e.at("center").at(1).get<double>(),
                        e.at("center").at(2).get<double>()};
            c.radius = e.at("radius").get<double>();
            c.normal = normalized({e.at("normal").at(0).get<double>(),
                                   e.at("normal").at(1).get<double>(),
                                   e.at("normal").at(2).get<double>()});
            c.carrier_sphere = e.value("sphere", -1);
            d.supports.push_back(Support::circle3(c));
        } else if (kind == "sphere") {
            d.supports.push_back(Support::sphere(
                {e.at("center").at(0).get<double>(), e.at("center").at(1).get<double>(),
                 e.at("center").at(2).get<double>()},
                e.at("radius").get<double>()));
        } else {
            throw io_error("unknown support kind: " + kind);
        }
    }
    for (auto& e : j.at("arcs")) {
        Arc a;
        a.support = e.at("support").get<int>();
        if (e.value("full", false)) {
            a.full = true;
        } else {
            a.u = e.at("edge").at(0).get<int>();
            a.v = e.at("edge").at(1).get<int>();
            a.start = e.at("sweep").at("start").get<double>();
            a.delta = e.at("sweep").at("delta").get<double>();
        }
        d.arcs.push_back(a);
    }
    return d;
}

std::string bound_report_to_json(const BoundReport& r) {
    json j;
    j["quantity"] = quantity_name(r.quantity);
    j["lower"] = r.lower ? json(*r.lower) : json(nullptr);
    j["upper"] = r.upper ? json(*r.upper) : json(nullptr);
    json prov = json::array();
    for (auto& p : r.provenance) prov.push_back({{"rule", p.rule}, {"value", p.value}});
    j["provenance"] = std::move(prov);
    return j.dump(2) + "\n";
}

std::string verification_report_to_json(const VerificationReport& r) {
    json j;
    j["valid"] = r.valid;
    j["support_count"] = r.support_count;
    j["certified_cover"] = r.certified_cover;
    json v = json::array();
    for (auto& x : r.violations) {
        json e;
        e["kind"] = x.kind;
        e["arcs"] = {x.arc_a, x.arc_b};
        e["where"] = {x.where[0], x.where[1], x.where[2]};
        e["note"] = x.note;
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    return j.dump(2) + "\n";
}

std::string mip_result_to_json(const MipResult& r, const AngleModel& model, long seg_lower) {
    json j;
    j["ang_pi"] = r.ang_pi_upper;
    j["seg_lower"] = seg_lower;
    j["status"] = r.optimal ? "optimal" : "budget-exhausted";
    j["node_count"] = r.node_count;
    j["variables"] = model.variable_count();
    j["constraints"] = model.constraint_count();
    j["lp_relaxation"] = r.lp_relaxation.str();
    j["three_connected"] = model.three_connected();
    return j.dump(2) + "\n";
}

} // namespace arccover
