#pragma once

#include "arccover/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arccover {

/// Size caps of the exact oracles.  Exceeding a cap raises
/// size_limit_error; there is no silent truncation.
inline constexpr int kBisectionMaxVertices = 18;
inline constexpr int kLinearArboricityMaxEdges = 16;
inline constexpr int kTreewidthMaxVertices = 12;
inline constexpr int kSeparatorMaxVertices = 14;

enum class Quantity { sigma12, sigma13, sigma23, seg, arc, rho12, rho13, rho23 };

std::optional<Quantity> quantity_from_name(const std::string& name);
std::string quantity_name(Quantity q);

struct ProvenanceEntry {
    std::string rule; // stable rule identifier
    long value;
};

struct BoundReport {
    Quantity quantity;
    std::optional<long> lower;
    std::optional<long> upper;
    std::vector<ProvenanceEntry> provenance;
};

// ---- exact integer helpers ----

/// Smallest non-negative integer c with c*c >= n.
long ceil_sqrt(long n);

// ---- closed-form lower bounds for sigma^1_d ----

/// ceil( (1 + sqrt(1 + 2 * sum ceil(deg/2)(ceil(deg/2)-1))) / 2 ),
/// evaluated in exact integer arithmetic.
long sigma_lower_degree(const Graph& g);

/// ceil( (1 + sqrt(2 m^2/n - 2m + 1)) / 2 ) for m >= n >= 1.
long sigma_lower_density(long n, long m);

// ---- exact combinatorial oracles ----

/// Exact bisection width by enumeration of ceil(n/2)-subsets (n <= 18).
int bisection_width_exact(const Graph& g);

/// ceil(bw(G) / 2).
int sigma_lower_bisection(const Graph& g);

/// Exact linear arboricity by backtracking partition into linear forests
/// (m <= 16).
int linear_arboricity_exact(const Graph& g);

/// Smallest s >= 0 with ceil(3 s / 2) >= la.
int sigma_lower_la(int la);

/// Exact minimum strongly balanced W-separator size (n <= 14).
/// A set S is feasible if W \ S splits into W1, W2 with |Wi| <= |W|/2 and
/// no path between them avoiding S.
int sep_star_exact(const Graph& g, const std::vector<int>& w);

/// ceil(sep*_W(G) / 2).
int sigma_lower_sep(const Graph& g, const std::vector<int>& w);

/// Exact treewidth via subset dynamic programming over elimination
/// orderings (n <= 12).
int treewidth_exact(const Graph& g);

// ---- closed-form family bounds ----

struct BoundPair {
    long lower;
    long upper;
};

/// floor((n+7)/6) <= sigma^2_3(K_n) <= ceil(n/4), n >= 3.
BoundPair kn_sigma23_bounds(long n);

struct Sigma23Kpq {
    long lower;
    long upper;
    bool exact; // true when q > p(p-1): both bounds equal ceil(p/2)
};

/// ceil(pq/(2p+2q-4)) <= sigma^2_3(K_{p,q}) <= p; exact ceil(p/2) when
/// q > p(p-1).  Arguments are normalized so p <= q.
Sigma23Kpq kpq_sigma23_bounds(long p, long q);

/// floor(n^2/8) <= sigma^1_3(K_n) <= floor((n^2+5n+6)/6).
BoundPair kn_sigma13_bounds(long n);

/// ceil(pq/4) <= sigma^1_3(K_{p,q}) <= ceil(p/2)*ceil(q/2).
BoundPair kpq_sigma13_bounds(long p, long q);

// ---- aggregation ----

/// What the aggregator is allowed to use.
struct RuleOptions {
    bool use_oracles = true;     // bw / la / tw / sep within their caps
    bool use_fixtures = true;    // cited literature and drawing fixtures
    bool planar = false;         // caller vouches that the graph is planar
};

/// A graph family the aggregator has closed-form knowledge about.
struct FamilyDescriptor {
    enum class Kind { platonic_solid, complete, bipartite, nested_tri, custom } kind;
    std::string platonic;   // for platonic_solid
    long a = 0, b = 0;       // n | p,q | k
};

FamilyDescriptor parse_family(const std::string& descriptor);
Graph family_graph(const FamilyDescriptor& fam);

/// Best lower bound = max over applicable rules, best upper = min; every
/// contributing rule is recorded in the provenance list, and values are
/// propagated along the inequality chains
///   rho23 <= sigma13 <= sigma12,  sigma <= rho (same l, d),
///   theta <= sigma23 <= ceil(bt/2),  sigma12 <= arc <= seg.
/// Throws integrity_error if the combined bounds contradict.
BoundReport aggregate_bounds(const FamilyDescriptor& fam, Quantity q,
                             const RuleOptions& opts = {});
BoundReport aggregate_bounds(const Graph& g, Quantity q, const RuleOptions& opts = {});

} // namespace arccover
