#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arccover {

using Edge = std::pair<int, int>; // stored with first < second

/// Simple undirected graph on dense vertex indices 0..n-1.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Adds an undirected edge; rejects loops, duplicates and out-of-range
    /// endpoints.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool connected() const;

    /// Optional string metadata (vertex labels, family parameters).
    std::map<std::string, std::string> meta;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Per-vertex cyclic neighbor lists in clockwise order.
struct RotationSystem {
    std::vector<std::vector<int>> order;

    /// Checks that every list is a permutation of the adjacency of its
    /// vertex.  Throws validation_error otherwise.
    void validate_against(const Graph& g) const;
};

/// One face of an embedding: a closed walk of directed edges.
struct Face {
    std::vector<std::pair<int, int>> walk; // directed edges (u, v)
    int degree() const { return static_cast<int>(walk.size()); }
};

struct EmbeddedGraph {
    Graph graph;
    RotationSystem rotation;
    int outer_face = 0; // index into trace_faces(*this)
};

/// Traces all faces of the embedding.  Faces are reported in a
/// deterministic order: each trace starts from the smallest untraced
/// directed edge, (u, v) compared lexicographically.
///
/// Within a face the walk rule is: after arriving along (u, v), the walk
/// continues with (v, w) where w is the clockwise successor of u in v's
/// rotation.
std::vector<Face> trace_faces(const EmbeddedGraph& embedding);

/// Both checks that the rotation matches the graph and that the traced
/// embedding is connected and genus zero (|V| - |E| + |F| = 2).
std::vector<Face> trace_faces_checked(const EmbeddedGraph& embedding);

enum class PlatonicSolid { tetrahedron, cube, octahedron, dodecahedron, icosahedron };

std::optional<PlatonicSolid> platonic_from_name(const std::string& name);
std::string platonic_name(PlatonicSolid s);

/// Canonical embedding of a platonic 1-skeleton.  Vertices are labeled in
/// lexicographic order of the solid's standard coordinates; the rotation
/// at each vertex is the clockwise neighbor order seen from outside the
/// solid.  The outer face is the first face in trace order.
EmbeddedGraph platonic(PlatonicSolid solid);
EmbeddedGraph platonic(const std::string& name);

/// Triangulation G_k made of k nested triangles; ring 0 is outermost.
/// Vertex 3*i + j is corner j of ring i.  G_2 is the octahedron.
/// meta["outer_triangle"] / meta["inner_triangle"] list the rings.
EmbeddedGraph nested_triangulation(int k);

Graph complete(int n);
Graph complete_bipartite(int p, int q);

} // namespace arccover
