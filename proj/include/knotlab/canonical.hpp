#ifndef KNOTLAB_CANONICAL_HPP
#define KNOTLAB_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "knotlab/graph.hpp"

namespace knotlab {

/// Total-order key with code(G) == code(H) iff G and H are isomorphic.
/// bytes = 4-byte big-endian order followed by the canonical upper-triangle
/// adjacency bits, MSB-first.
struct CanonicalCode {
    std::string bytes;

    bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
};

/// Canonical form by refinement-based backtracking: the lexicographically
/// least packed adjacency string over the automorphism-pruned search tree.
/// Exact for any order; tuned for the small graphs (n <= ~15) the rest of
/// the library canonicalizes.
CanonicalCode canonical_code(const Graph& g);

/// Relabeling that realizes canonical_code: result.relabeled(perm) has the
/// canonical adjacency string.
std::vector<int> canonical_labeling(const Graph& g);

/// Packed (order, canonical bits) in one word. Requires order <= 11.
uint64_t canonical_key64(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// All automorphisms of g, as vertex maps p with p[v] = image of v.
/// Work and memory are proportional to |Aut(g)|, so this is meant for the
/// small orders the library enumerates (|Aut| <= a few hundred thousand).
std::vector<std::vector<int>> enumerate_automorphisms(const Graph& g);

/// Exact |Aut(g)| by backtracking with partition-refinement pruning.
long long automorphism_count(const Graph& g);

}  // namespace knotlab

#endif
