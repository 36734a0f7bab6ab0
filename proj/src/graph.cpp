#include "knotlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace knotlab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph Graph::complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    int off_i = 0;
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        int off_j = off_i + parts[pi];
        for (size_t pj = pi + 1; pj < parts.size(); ++pj) {
            for (int i = 0; i < parts[pi]; ++i)
                for (int j = 0; j < parts[pj]; ++j) g.add_edge(off_i + i, off_j + j);
            off_j += parts[pj];
        }
        off_i += parts[pi];
    }
    return g;
}

Graph Graph::petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

int Graph::size() const {
    long long total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return static_cast<int>(total / 2);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("no self-loops");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        uint64_t word = r[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (!has_edge(i, j)) g.add_edge(i, j);
    return g;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    VertexSet keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(keep);
}

Graph Graph::delete_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("delete_edge: not an edge");
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::induced_subgraph(const VertexSet& s) const {
    for (int v : s) check_vertex(v);
    Graph g(static_cast<int>(s.size()));
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (has_edge(s[a], s[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

Graph Graph::contract_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("contract_edge: not an edge");
    if (u > v) std::swap(u, v);
    // Merge v into u, then compact away v. Parallel edges collapse, the loop
    // u-v disappears; the result stays simple.
    Graph g(n_ - 1);
    auto newlabel = [v](int x) { return x < v ? x : x - 1; };
    for (int j = 1; j < n_; ++j) {
        if (j == v) continue;
        for (int i = 0; i < j; ++i) {
            if (i == v) continue;
            bool adj = has_edge(i, j);
            if (i == u) adj = adj || has_edge(v, j);
            if (j == u) adj = adj || has_edge(i, v);
            if (adj) g.add_edge(newlabel(i), newlabel(j));
        }
    }
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("bad permutation size");
    Graph g(n_);
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (has_edge(perm[i], perm[j])) g.add_edge(i, j);
    return g;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int u : neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

std::vector<uint64_t> Graph::upper_bits() const {
    long long nbits = pair_count(n_);
    std::vector<uint64_t> out((nbits + 63) / 64, 0);
    long long idx = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (has_edge(i, j)) out[idx >> 6] |= uint64_t{1} << (idx & 63);
    return out;
}

std::pair<int, int> pair_from_index(long long idx) {
    // Smallest j with C(j+1,2) > idx.
    int j = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    while (pair_count(j + 1) <= idx) ++j;
    while (pair_count(j) > idx) --j;
    return {static_cast<int>(idx - pair_count(j)), j};
}

namespace {

void append_g6_number(std::string& s, long long n) {
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        s.push_back(126);
        s.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace

std::string Graph::to_graph6() const {
    std::string s;
    append_g6_number(s, n_);
    long long nbits = pair_count(n_);
    int acc = 0, nacc = 0;
    long long idx = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i, ++idx) {
            acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
            if (++nacc == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nacc = 0;
            }
        }
    if (nacc > 0) s.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
    (void)nbits;
    return s;
}

Graph Graph::from_graph6(std::string_view s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (s.size() < pos + k) throw std::invalid_argument("graph6: truncated input");
    };
    auto val = [&](size_t i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
        return static_cast<long long>(c - 63);
    };
    need(1);
    long long n;
    if (s[0] != 126) {
        n = val(0);
        pos = 1;
    } else {
        need(2);
        if (s[1] != 126) {
            need(4);
            n = (val(1) << 12) | (val(2) << 6) | val(3);
            pos = 4;
        } else {
            need(8);
            n = 0;
            for (size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
            pos = 8;
        }
    }
    // The dense bitmap costs n^2/8 bytes; keep untrusted input bounded.
    if (n > 16384) throw std::invalid_argument("graph6: order too large for the dense representation");
    Graph g(static_cast<int>(n));
    long long nbits = pair_count(static_cast<int>(n));
    long long nbytes = (nbits + 5) / 6;
    need(static_cast<size_t>(nbytes));
    if (s.size() != pos + static_cast<size_t>(nbytes))
        throw std::invalid_argument("graph6: trailing bytes");
    long long idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx) {
            long long byte = idx / 6;
            int bit = 5 - static_cast<int>(idx % 6);
            if ((val(pos + byte) >> bit) & 1) g.add_edge(i, j);
        }
    return g;
}

}  // namespace knotlab
