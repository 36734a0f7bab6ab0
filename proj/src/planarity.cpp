#include "knotlab/planarity.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace knotlab {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>>;

bool boyer_myrvold(const Graph& g) {
    BoostGraph bg(g.order());
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) boost::add_edge(i, j, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

bool is_planar(const Graph& g) {
    int n = g.order();
    if (n <= 4) return true;
    if (g.size() > 3 * n - 6) return false;
    return boyer_myrvold(g);
}

ApexResult is_n_apex(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_n_apex: k must be nonnegative");
    int n = g.order();
    int m = g.size();
    auto degs = g.degrees();
    std::vector<int> sorted_degs = degs;
    std::sort(sorted_degs.begin(), sorted_degs.end(), std::greater<>());

    VertexSet subset;
    VertexSet rest;

    // Edges of the graph induced on V \ subset.
    auto remaining_edges = [&](const VertexSet& s) {
        int removed = 0;
        for (size_t a = 0; a < s.size(); ++a) {
            removed += degs[s[a]];
            for (size_t b = a + 1; b < s.size(); ++b)
                if (g.has_edge(s[a], s[b])) --removed;  // counted twice
        }
        return m - removed;
    };

    auto euler_bound = [&](int order) { return order >= 3 ? 3 * order - 6 : pair_count(order); };

    std::function<bool(int, int)> scan = [&](int next, int want) -> bool {
        if (static_cast<int>(subset.size()) == want) {
            if (remaining_edges(subset) > euler_bound(n - want)) return false;
            rest.clear();
            size_t si = 0;
            for (int v = 0; v < n; ++v) {
                if (si < subset.size() && subset[si] == v) {
                    ++si;
                    continue;
                }
                rest.push_back(v);
            }
            return is_planar(g.induced_subgraph(rest));
        }
        for (int v = next; v <= n - (want - static_cast<int>(subset.size())); ++v) {
            subset.push_back(v);
            if (scan(v + 1, want)) return true;
            subset.pop_back();
        }
        return false;
    };

    for (int s = 0; s <= std::min(k, n); ++s) {
        // Even deleting the s highest-degree vertices cannot reach the Euler
        // bound: no subset of this size works.
        int best_removable = 0;
        for (int i = 0; i < s; ++i) best_removable += sorted_degs[i];
        if (m - best_removable > euler_bound(n - s)) continue;
        subset.clear();
        if (scan(0, s)) {
            ApexResult res;
            res.is_n_apex = true;
            res.witness = subset;
            // Re-verify the witness with an independent planarity call.
            VertexSet keep;
            size_t si = 0;
            for (int v = 0; v < n; ++v) {
                if (si < res.witness.size() && res.witness[si] == v) {
                    ++si;
                    continue;
                }
                keep.push_back(v);
            }
            if (!is_planar(g.induced_subgraph(keep)))
                throw std::logic_error("is_n_apex: witness failed re-verification");
            return res;
        }
    }
    return {};
}

}  // namespace knotlab
