#ifndef KNOTLAB_PLANARITY_HPP
#define KNOTLAB_PLANARITY_HPP

#include "knotlab/graph.hpp"

namespace knotlab {

/// Exact planarity test. Euler-bound fast reject, then Boyer-Myrvold.
bool is_planar(const Graph& g);

struct ApexResult {
    bool is_n_apex = false;
    VertexSet witness;  // apex set; meaningful only when is_n_apex
};

/// Does g become planar after deleting at most k vertices? Exact subset
/// search with Euler-bound pruning. Among apex sets of the smallest workable
/// size, returns the lexicographically least, so witnesses are deterministic.
ApexResult is_n_apex(const Graph& g, int k);

}  // namespace knotlab

#endif
