#pragma once

#include "arccover/graph.hpp"
#include "arccover/lp.hpp"
#include "arccover/rational.hpp"

#include <string>
#include <vector>

namespace arccover {

/// One angle slot of the model: the clockwise sector at `vertex` between
/// anchored neighbors slot and slot+1 (mod deg), lying in face `face`.
struct Corner {
    int vertex;
    int slot;
    int face;
};

/// Index pair (i, j), 1 <= i < j <= deg(v), in the anchored clockwise
/// neighbor list; its angle is the sum of corners i .. j-1.
struct AnglePair {
    int vertex;
    int i, j;
    std::vector<int> corners; // corner variable ids of the sum
};

/// The exact angle-assignment MIP of an embedded planar graph.
///
/// Variables: one fractional corner angle x per vertex-face incidence
/// (unit: multiples of pi) and one binary s per neighbor pair; the pair
/// angles y are kept substituted as their corner sums.  Constraints per
/// the documented inventory:
///   - per vertex:        sum of its corners = 2
///   - per inner face f:  sum of its corners = deg(f) - 2
///   - outer face f0:     sum of its corners = deg(f0) + 2
///   - per pair (v,i,j):  s <= sum(corners i..j-1)  and
///                        s <= 2 - sum(corners i..j-1)
///   - per corner:        x >= eps  and  x <= 2 - eps
///   - per outer corner:  the cap x <= 2 - eps is carried as its own row
/// Reported sizes count x and s variables and the full row inventory.
class AngleModel {
  public:
    /// Builds the model.  eps = 0 (default) is the closed relaxation of
    /// the open interval (0, 2); it is the domain used for certified
    /// bounds.  eps > 0 is an experimental mode.
    AngleModel(const EmbeddedGraph& embedding, const Rational& eps = Rational(0));

    int variable_count() const { return static_cast<int>(corners_.size() + pairs_.size()); }
    int constraint_count() const { return constraint_count_; }
    int corner_count() const { return static_cast<int>(corners_.size()); }
    int pair_count() const { return static_cast<int>(pairs_.size()); }
    int edge_count() const { return edge_count_; }
    bool three_connected() const { return three_connected_; }
    const Rational& eps() const { return eps_; }

    const std::vector<Corner>& corners() const { return corners_; }
    const std::vector<AnglePair>& pairs() const { return pairs_; }
    const std::vector<int>& face_degrees() const { return face_degrees_; }
    int outer_face() const { return outer_face_; }
    int vertex_degree(int v) const { return vertex_degrees_[v]; }
    int vertex_count() const { return vertex_count_; }

    /// The solver form: corner bounds become variable bounds; structural
    /// variables are corners first, then pair binaries (relaxed to [0,1]).
    const LinearProgram& relaxation() const { return lp_; }
    int s_var(int pair_id) const { return corner_count() + pair_id; }

    /// Plain-text model export (LP file format).  Requires eps to have a
    /// terminating decimal expansion.
    std::string export_lp_format() const;

  private:
    std::vector<Corner> corners_;
    std::vector<AnglePair> pairs_;
    std::vector<uint8_t> outer_corner_; // flags corners of the outer face
    std::vector<int> face_degrees_;
    std::vector<int> vertex_degrees_;
    LinearProgram lp_;
    Rational eps_;
    int constraint_count_ = 0;
    int edge_count_ = 0;
    int vertex_count_ = 0;
    int face_count_ = 0;
    int outer_face_ = 0;
    int outer_degree_ = 0;
    bool three_connected_ = false;
};

struct MipBudget {
    long max_nodes = 50'000'000;
    double max_seconds = 0; // 0 = unlimited
};

struct MipResult {
    long ang_pi_upper = 0;           // objective of the best integer point
    bool optimal = false;            // false when a budget stopped the search
    long node_count = 0;
    double wall_seconds = 0;
    Rational lp_relaxation;          // root bound
    std::vector<Rational> corner_values;
    std::vector<Rational> s_values;
    bool found_incumbent = false;
};

/// Relaxes the binaries to [0,1] and solves the LP exactly.
LpResult solve_relaxation(const AngleModel& model);

/// Exact branch-and-bound maximization of the pi-angle count.
///
/// With eps = 0 the answer follows the open-interval reading of the
/// corner domains: a set of pi-angles counts only if the remaining
/// angles can all stay strictly positive.  The search bounds nodes with
/// the closed LP relaxation (strengthened by inequalities valid for
/// strictly positive assignments) and certifies every incumbent with an
/// exact margin LP, so no epsilon is ever guessed.  With eps > 0 the
/// model is an ordinary MIP over [eps, 2 - eps].
///
/// Branching: most fractional binary, ties by lowest index; depth-first
/// diving with best-bound backtracking.  The optimum is independent of
/// the exploration order.
MipResult solve_mip(const AngleModel& model, const MipBudget& budget = {});

struct SegmentBound {
    long bound; // |E| - ang_pi
    MipResult mip;
};

/// Lower bound on the segment number of the embedded graph.
SegmentBound segment_lower_bound(const EmbeddedGraph& embedding, const MipBudget& budget = {});

/// True iff g stays connected after removing any two vertices (and n >= 4).
bool is_three_connected(const Graph& g);

} // namespace arccover
