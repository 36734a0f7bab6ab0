#ifndef KNOTLAB_MINORS_HPP
#define KNOTLAB_MINORS_HPP

#include <optional>
#include <vector>

#include "knotlab/graph.hpp"

namespace knotlab {

/// Witness that h is a minor of g: one branch set per vertex of h. Branch
/// sets are disjoint, each induces a connected subgraph of g, and every edge
/// of h has a realizing edge of g between the matching sets.
struct MinorCertificate {
    std::vector<VertexSet> branch_sets;
};

/// Independent certificate checker (connectivity, disjointness, edge
/// coverage). Every certificate the search returns must pass this.
bool check_minor_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert);

/// Exact minor containment with certificate. Searches contractions of g for
/// a subgraph copy of h, with degree-0/1/2 reductions gated on h's minimum
/// degree, component and planarity pruning, and canonical-code memoization
/// on small intermediate graphs.
std::optional<MinorCertificate> has_minor(const Graph& g, const Graph& h);

/// One traversal deciding several targets at once: present iff some target
/// is a minor of g; returns (target index, certificate) for the first one
/// the search reaches. Much cheaper than separate searches when the answer
/// is no for all targets (the obstruction-family test). Targets must have
/// minimum degree >= 1.
std::optional<std::pair<int, MinorCertificate>> has_any_minor(const Graph& g,
                                                              const std::vector<Graph>& targets);

/// has_minor(g, K_r).
std::optional<MinorCertificate> has_clique_minor(const Graph& g, int r);

/// Mader's edge bound: order >= 7 and size >= 5*order - 14 forces a K_7
/// minor. No search, just the arithmetic test.
bool mader_certifies(const Graph& g);

/// Replace triangle {a,b,c} by a new degree-3 vertex.
Graph delta_y(const Graph& g, int a, int b, int c);

/// Replace degree-3 vertex v by a triangle on its neighbors; edges that
/// already exist are kept simple.
Graph y_delta(const Graph& g, int v);

/// Closure of {g} under both moves, up to isomorphism, sorted by
/// (order, canonical code).
std::vector<Graph> delta_y_closure(const Graph& g);

/// The seven linkless-embedding obstructions, computed once as
/// delta_y_closure(K_6) and validated (7 members, 15 edges each, Petersen
/// graph included, all nonplanar).
const std::vector<Graph>& petersen_family();

}  // namespace knotlab

#endif
