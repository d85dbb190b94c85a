#pragma once

#include "arccover/angle_model.hpp"
#include "arccover/bounds.hpp"
#include "arccover/drawing.hpp"
#include "arccover/graph.hpp"

#include <string>

namespace arccover {

// Graph schema:
//   { "n": int, "edges": [[u,v],...],
//     "rotation": [[...],...],          // optional
//     "outer_face": int,                // optional
//     "meta": { ... } }                 // optional string map
std::string graph_to_json(const Graph& g);
std::string embedded_to_json(const EmbeddedGraph& eg);
Graph graph_from_json(const std::string& text);
/// Returns the embedding when rotation data is present.
EmbeddedGraph embedded_from_json(const std::string& text);
bool json_has_rotation(const std::string& text);

// Drawing schema:
//   { "dim": 2|3, "graph": {...}, "vertices": [[x,y(,z)],...],
//     "supports": [{"kind": "circle|line|circle3|sphere", ...}],
//     "arcs": [{"edge": [u,v], "support": i,
//               "sweep": {"start": a, "delta": d}} | {"full": true}] }
std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

// { "quantity": str, "lower": int|null, "upper": int|null,
//   "provenance": [{"rule": str, "value": int}] }
std::string bound_report_to_json(const BoundReport& r);

std::string verification_report_to_json(const VerificationReport& r);

std::string mip_result_to_json(const MipResult& r, const AngleModel& model, long seg_lower);

} // namespace arccover
