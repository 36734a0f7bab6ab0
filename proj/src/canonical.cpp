#include "knotlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace knotlab {

namespace {

// Neighbor masks, one row of `words` u64 per vertex.
struct Masks {
    int n, words;
    std::vector<uint64_t> bits;

    explicit Masks(const Graph& g) : n(g.order()), words(g.words_per_row()) {
        if (words == 0) words = 1;
        bits.assign(static_cast<size_t>(n) * words, 0);
        for (int v = 0; v < n; ++v) {
            const uint64_t* r = g.row(v);
            for (int w = 0; w < g.words_per_row(); ++w) bits[static_cast<size_t>(v) * words + w] = r[w];
        }
    }
    const uint64_t* row(int v) const { return bits.data() + static_cast<size_t>(v) * words; }
    bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
};

int count_in(const Masks& m, int v, const std::vector<uint64_t>& cellmask) {
    int c = 0;
    const uint64_t* r = m.row(v);
    for (int w = 0; w < m.words; ++w) c += std::popcount(r[w] & cellmask[w]);
    return c;
}

using Partition = std::vector<std::vector<int>>;  // ordered cells, vertices sorted

// Equitable refinement. Splits every cell by neighbor counts against every
// current cell until stable; subcells ordered by ascending count vector, so
// the outcome is invariant under vertex relabeling.
void refine(const Masks& m, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<uint64_t>> masks(cells.size(), std::vector<uint64_t>(m.words, 0));
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) masks[c][v >> 6] |= uint64_t{1} << (v & 63);
        Partition next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> buckets;
            for (int v : cell) {
                std::vector<int> key(cells.size());
                for (size_t c = 0; c < cells.size(); ++c) key[c] = count_in(m, v, masks[c]);
                buckets[key].push_back(v);
            }
            if (buckets.size() > 1) changed = true;
            for (auto& [key, verts] : buckets) next.push_back(std::move(verts));
        }
        cells = std::move(next);
    }
}

// Packed upper-triangle bits of g relabeled by `order` (column pair order,
// MSB-first within words), truncated to the first `cols` columns. Word-wise
// unsigned comparison of two packings equals lexicographic bit comparison.
std::vector<uint64_t> pack_prefix(const Masks& m, const std::vector<int>& order, int cols) {
    long long nbits = pair_count(cols);
    std::vector<uint64_t> out(static_cast<size_t>((nbits + 63) / 64), 0);
    long long idx = 0;
    for (int j = 1; j < cols; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (m.adjacent(order[i], order[j])) out[idx >> 6] |= uint64_t{1} << (63 - (idx & 63));
    return out;
}

// Compare a prefix packing against the same number of bits of `best`.
int compare_bits(const std::vector<uint64_t>& pre, long long nbits, const std::vector<uint64_t>& best) {
    size_t full = static_cast<size_t>(nbits / 64);
    for (size_t w = 0; w < full; ++w) {
        if (pre[w] != best[w]) return pre[w] < best[w] ? -1 : 1;
    }
    int rem = static_cast<int>(nbits % 64);
    if (rem) {
        uint64_t mask = ~uint64_t{0} << (64 - rem);
        uint64_t a = pre[full] & mask, b = best[full] & mask;
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

struct CanonSearch {
    const Masks& m;
    std::vector<uint64_t> best;
    std::vector<int> best_order;
    bool have_best = false;
    UnionFind orbits;

    explicit CanonSearch(const Masks& masks) : m(masks), orbits(masks.n) {}

    void run() {
        Partition cells{std::vector<int>(m.n)};
        std::iota(cells[0].begin(), cells[0].end(), 0);
        if (m.n == 0) {
            have_best = true;
            return;
        }
        node(cells, 0);
    }

    void node(Partition cells, int depth) {
        refine(m, cells);
        // Leading singleton cells fix a prefix of the adjacency string.
        int fixed = 0;
        while (fixed < static_cast<int>(cells.size()) && cells[fixed].size() == 1) ++fixed;
        if (have_best && fixed > 1) {
            std::vector<int> prefix(fixed);
            for (int i = 0; i < fixed; ++i) prefix[i] = cells[i][0];
            auto packed = pack_prefix(m, prefix, fixed);
            if (compare_bits(packed, pair_count(fixed), best) > 0) return;
        }
        if (fixed == static_cast<int>(cells.size())) {
            std::vector<int> order(m.n);
            for (int i = 0; i < m.n; ++i) order[i] = cells[i][0];
            auto packed = pack_prefix(m, order, m.n);
            if (!have_best) {
                best = packed;
                best_order = order;
                have_best = true;
                return;
            }
            int cmp = compare_bits(packed, pair_count(m.n), best);
            if (cmp < 0) {
                best = packed;
                best_order = order;
            } else if (cmp == 0) {
                // Two labelings with the same canonical string: record the
                // automorphism mapping best_order[i] -> order[i].
                for (int i = 0; i < m.n; ++i) orbits.unite(best_order[i], order[i]);
            }
            return;
        }
        // Branch on the first smallest non-singleton cell.
        int target = fixed;
        for (size_t c = fixed; c < cells.size(); ++c)
            if (cells[c].size() > 1 && cells[c].size() < cells[target].size()) target = static_cast<int>(c);
        std::vector<int> branched;
        for (int v : cells[target]) {
            if (depth == 0) {
                bool pruned = false;
                for (int w : branched)
                    if (orbits.find(v) == orbits.find(w)) {
                        pruned = true;
                        break;
                    }
                if (pruned) continue;
                branched.push_back(v);
            }
            Partition child;
            child.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (static_cast<int>(c) != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[target])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            node(std::move(child), depth + 1);
        }
    }
};

std::vector<uint64_t> canonical_bits(const Graph& g, std::vector<int>* labeling) {
    Masks m(g);
    CanonSearch search(m);
    search.run();
    if (labeling) *labeling = search.best_order;
    return search.best;
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    auto bits = canonical_bits(g, nullptr);
    CanonicalCode code;
    uint32_t n = static_cast<uint32_t>(g.order());
    for (int shift = 24; shift >= 0; shift -= 8)
        code.bytes.push_back(static_cast<char>((n >> shift) & 0xff));
    long long nbits = pair_count(g.order());
    for (long long b = 0; b < nbits; b += 8) {
        uint8_t byte = 0;
        for (int k = 0; k < 8 && b + k < nbits; ++k) {
            long long idx = b + k;
            if ((bits[idx >> 6] >> (63 - (idx & 63))) & 1) byte |= 0x80 >> k;
        }
        code.bytes.push_back(static_cast<char>(byte));
    }
    return code;
}

std::vector<int> canonical_labeling(const Graph& g) {
    std::vector<int> labeling;
    canonical_bits(g, &labeling);
    return labeling;
}

uint64_t canonical_key64(const Graph& g) {
    if (g.order() > 11) throw std::invalid_argument("canonical_key64: order > 11");
    auto bits = canonical_bits(g, nullptr);
    // At most C(11,2) = 55 canonical bits, all in the top of word 0.
    uint64_t packed = bits.empty() ? 0 : bits[0] >> 9;
    return (static_cast<uint64_t>(g.order()) << 55) | packed;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_code(g) == canonical_code(h);
}

namespace {

struct AutSearch {
    const Masks& m;
    std::vector<int> color;        // refined color class per vertex
    std::vector<int> order;        // mapping order (partition order)
    std::vector<int> image;        // image[v], -1 if unset
    std::vector<char> used;
    std::vector<std::vector<int>> found;

    explicit AutSearch(const Masks& masks) : m(masks) {}

    void run() {
        Partition cells{std::vector<int>(m.n)};
        std::iota(cells[0].begin(), cells[0].end(), 0);
        if (m.n == 0) {
            found.push_back({});
            return;
        }
        refine(m, cells);
        color.assign(m.n, 0);
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) color[v] = static_cast<int>(c);
        for (auto& cell : cells)
            for (int v : cell) order.push_back(v);
        image.assign(m.n, -1);
        used.assign(m.n, 0);
        extend(0);
    }

    void extend(int pos) {
        if (pos == m.n) {
            found.push_back(image);
            return;
        }
        int v = order[pos];
        for (int w = 0; w < m.n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            bool ok = true;
            for (int p = 0; p < pos; ++p) {
                int u = order[p];
                if (m.adjacent(v, u) != m.adjacent(w, image[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            extend(pos + 1);
            image[v] = -1;
            used[w] = 0;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_automorphisms(const Graph& g) {
    Masks m(g);
    AutSearch search(m);
    search.run();
    return search.found;
}

long long automorphism_count(const Graph& g) {
    return static_cast<long long>(enumerate_automorphisms(g).size());
}

}  // namespace knotlab
