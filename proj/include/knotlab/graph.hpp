#ifndef KNOTLAB_GRAPH_HPP
#define KNOTLAB_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotlab {

using VertexSet = std::vector<int>;  // sorted, duplicate-free

/// Simple undirected graph on vertices 0..n-1, stored as one bitmap row per
/// vertex (64-bit words). No loops, symmetric adjacency. Values are treated
/// as immutable once built; every operation below returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph empty(int n) { return Graph(n); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph complete_multipartite(const std::vector<int>& parts);
    static Graph petersen();

    int order() const { return n_; }
    int size() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degrees() const;
    std::vector<int> neighbors(int v) const;

    int words_per_row() const { return words_; }
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    Graph complement() const;
    Graph delete_vertex(int v) const;
    Graph delete_edge(int u, int v) const;
    Graph induced_subgraph(const VertexSet& s) const;
    Graph contract_edge(int u, int v) const;

    /// Relabel: vertex v of the result is old vertex perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    /// Upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3),...
    /// packed little-endian into words. Matches graph6 bit order.
    std::vector<uint64_t> upper_bits() const;

    static Graph from_graph6(std::string_view s);
    std::string to_graph6() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

/// Linear index of pair (i, j), i < j, in column order: C(j,2) + i.
inline long long pair_index(int i, int j) {
    return static_cast<long long>(j) * (j - 1) / 2 + i;
}

/// Inverse of pair_index.
std::pair<int, int> pair_from_index(long long idx);

inline long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace knotlab

#endif
