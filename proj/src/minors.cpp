#include "knotlab/minors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "knotlab/canonical.hpp"
#include "knotlab/planarity.hpp"

namespace knotlab {

bool check_minor_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert) {
    int n = g.order();
    if (static_cast<int>(cert.branch_sets.size()) != h.order()) return false;
    std::vector<char> used(n, 0);
    for (const auto& set : cert.branch_sets) {
        if (set.empty()) return false;
        for (int v : set) {
            if (v < 0 || v >= n || used[v]) return false;
            used[v] = 1;
        }
        // Connectivity of the induced subgraph.
        std::vector<char> inset(n, 0), seen(n, 0);
        for (int v : set) inset[v] = 1;
        std::vector<int> stack{set[0]};
        seen[set[0]] = 1;
        size_t reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (inset[u] && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != set.size()) return false;
    }
    for (int b = 1; b < h.order(); ++b)
        for (int a = 0; a < b; ++a) {
            if (!h.has_edge(a, b)) continue;
            bool covered = false;
            for (int u : cert.branch_sets[a]) {
                for (int v : cert.branch_sets[b])
                    if (g.has_edge(u, v)) {
                        covered = true;
                        break;
                    }
                if (covered) break;
            }
            if (!covered) return false;
        }
    return true;
}

bool mader_certifies(const Graph& g) {
    return g.order() >= 7 && g.size() >= 5 * g.order() - 14;
}

namespace {

// ---------------------------------------------------------------------------
// Minor search. Uses the characterization: h is a minor of g iff h is a
// subgraph of some graph obtained from g by contractions alone. (Branching
// on "contract or delete an edge" with a subgraph base case is incomplete:
// K_4 with one edge subdivided defeats it when the branch edge joins two
// singleton branch sets.) So the search keeps a contraction state, checks
// for a subgraph copy of h at every node, and branches only on contractions.
// Vertex slots stay fixed at the original labels; a union-find with rollback
// tracks which originals each surviving slot has absorbed, which is exactly
// the branch set needed for the certificate.
// ---------------------------------------------------------------------------

struct PackedState {
    int slots = 0;
    int W = 0;
    std::vector<uint64_t> rows;   // slots * W, dead rows zeroed
    std::vector<uint64_t> alive;  // W words
    int alive_count = 0;
    long long edges = 0;

    explicit PackedState(const Graph& g)
        : slots(g.order()), W(std::max(1, g.words_per_row())), alive_count(g.order()), edges(g.size()) {
        rows.assign(static_cast<size_t>(slots) * W, 0);
        alive.assign(W, 0);
        for (int v = 0; v < slots; ++v) {
            alive[v >> 6] |= uint64_t{1} << (v & 63);
            for (int w = 0; w < g.words_per_row(); ++w) rows[static_cast<size_t>(v) * W + w] = g.row(v)[w];
        }
    }

    uint64_t* row(int v) { return rows.data() + static_cast<size_t>(v) * W; }
    const uint64_t* row(int v) const { return rows.data() + static_cast<size_t>(v) * W; }

    bool is_alive(int v) const { return (alive[v >> 6] >> (v & 63)) & 1; }
    bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }

    int degree(int v) const {
        int d = 0;
        const uint64_t* r = row(v);
        for (int w = 0; w < W; ++w) d += std::popcount(r[w]);
        return d;
    }

    int common_neighbors(int u, int v) const {
        int c = 0;
        const uint64_t* a = row(u);
        const uint64_t* b = row(v);
        for (int w = 0; w < W; ++w) c += std::popcount(a[w] & b[w]);
        return c;
    }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        out.reserve(alive_count);
        for (int w = 0; w < W; ++w) {
            uint64_t word = alive[w];
            while (word) {
                out.push_back(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
        return out;
    }

    std::vector<int> neighbor_list(int v) const {
        std::vector<int> out;
        const uint64_t* r = row(v);
        for (int w = 0; w < W; ++w) {
            uint64_t word = r[w];
            while (word) {
                out.push_back(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
        return out;
    }

    void delete_vertex(int v) {
        for (int u : neighbor_list(v)) {
            row(u)[v >> 6] &= ~(uint64_t{1} << (v & 63));
            --edges;
        }
        std::fill(row(v), row(v) + W, 0);
        alive[v >> 6] &= ~(uint64_t{1} << (v & 63));
        --alive_count;
    }

    // Merge `merge` into `keep` (they must be adjacent).
    void contract(int keep, int merge) {
        edges -= 1 + common_neighbors(keep, merge);
        for (int x : neighbor_list(merge)) {
            row(x)[merge >> 6] &= ~(uint64_t{1} << (merge & 63));
            if (x != keep) {
                row(x)[keep >> 6] |= uint64_t{1} << (keep & 63);
                row(keep)[x >> 6] |= uint64_t{1} << (x & 63);
            }
        }
        row(keep)[keep >> 6] &= ~(uint64_t{1} << (keep & 63));
        row(keep)[merge >> 6] &= ~(uint64_t{1} << (merge & 63));
        std::fill(row(merge), row(merge) + W, 0);
        alive[merge >> 6] &= ~(uint64_t{1} << (merge & 63));
        --alive_count;
    }

    Graph to_graph(std::vector<int>* slot_of_index = nullptr) const {
        auto verts = alive_vertices();
        Graph g(static_cast<int>(verts.size()));
        for (size_t b = 1; b < verts.size(); ++b)
            for (size_t a = 0; a < b; ++a)
                if (adjacent(verts[a], verts[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        if (slot_of_index) *slot_of_index = verts;
        return g;
    }

    std::pair<uint64_t, uint64_t> fingerprint() const {
        auto mix = [](uint64_t z) {
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        };
        uint64_t a = 0x243f6a8885a308d3ull, b = 0x13198a2e03707344ull;
        for (int w = 0; w < W; ++w) {
            a = mix(a ^ alive[w]);
            b = mix(b + alive[w] * 0x9e3779b97f4a7c15ull);
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            a = mix(a ^ (rows[i] + i));
            b = mix(b + rows[i] * 0x9e3779b97f4a7c15ull + i);
        }
        return {a, b};
    }
};

struct PathUF {
    std::vector<int> parent;
    std::vector<int> trail;

    explicit PathUF(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    void unite(int keep, int merge) {
        int a = find(keep), b = find(merge);
        if (a == b) return;
        parent[b] = a;
        trail.push_back(b);
    }
    size_t mark() const { return trail.size(); }
    void rollback(size_t m) {
        while (trail.size() > m) {
            parent[trail.back()] = trail.back();
            trail.pop_back();
        }
    }
};

struct Fingerprint128Hash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
        return static_cast<size_t>(p.first ^ (p.second * 0x9e3779b97f4a7c15ull));
    }
};

struct TargetInfo {
    const Graph* graph;
    int order, size;
    std::vector<int> degs;
    std::vector<int> desc;  // vertices by descending degree
};

bool is_biconnected(const Graph& g) {
    if (g.order() < 3) return false;
    if (!g.is_connected()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!g.delete_vertex(v).is_connected()) return false;
    return true;
}

struct MinorSearch {
    const Graph& host;
    std::vector<TargetInfo> targets;
    int h_order, h_size, h_min_deg;  // weakest bounds across targets
    bool h_connected, h_nonplanar;   // true only if it holds for every target
    bool h_biconnected;              // enables block splitting
    PathUF uf;
    std::unordered_set<std::pair<uint64_t, uint64_t>, Fingerprint128Hash> visited;
    std::unordered_set<uint64_t> neg_memo;  // canonical keys, alive <= 11
    MinorCertificate result;
    int found_target = -1;

    MinorSearch(const Graph& g, const std::vector<Graph>& hs) : host(g), uf(g.order()) {
        h_order = std::numeric_limits<int>::max();
        h_size = std::numeric_limits<int>::max();
        h_min_deg = std::numeric_limits<int>::max();
        h_connected = true;
        h_nonplanar = true;
        h_biconnected = true;
        for (const auto& h : hs) {
            h_biconnected = h_biconnected && is_biconnected(h);
            TargetInfo info;
            info.graph = &h;
            info.order = h.order();
            info.size = h.size();
            info.degs = h.degrees();
            info.desc.resize(info.order);
            for (int i = 0; i < info.order; ++i) info.desc[i] = i;
            std::sort(info.desc.begin(), info.desc.end(), [&](int a, int b) {
                if (info.degs[a] != info.degs[b]) return info.degs[a] > info.degs[b];
                return a < b;
            });
            h_order = std::min(h_order, info.order);
            h_size = std::min(h_size, info.size);
            h_min_deg = std::min(h_min_deg, *std::min_element(info.degs.begin(), info.degs.end()));
            h_connected = h_connected && h.is_connected();
            h_nonplanar = h_nonplanar && !is_planar(h);
            targets.push_back(std::move(info));
        }
    }

    // Degree-0/1 deletions and degree-2 suppressions, gated on the minimum
    // degree of the target; safe for minor containment at those thresholds.
    void reduce(PackedState& s) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < s.slots; ++v) {
                if (!s.is_alive(v)) continue;
                int d = s.degree(v);
                if (d == 0 && h_min_deg >= 1) {
                    s.delete_vertex(v);
                    changed = true;
                } else if (d == 1 && h_min_deg >= 2) {
                    s.delete_vertex(v);
                    changed = true;
                } else if (d == 2 && h_min_deg >= 3) {
                    auto nb = s.neighbor_list(v);
                    int keep = std::min(nb[0], nb[1]);
                    uf.unite(keep, v);
                    s.contract(keep, v);
                    changed = true;
                }
            }
        }
    }

    std::vector<std::vector<int>> components(const PackedState& s) const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(s.slots, 0);
        for (int start : s.alive_vertices()) {
            if (seen[start]) continue;
            comps.emplace_back();
            std::vector<int> stack{start};
            seen[start] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comps.back().push_back(v);
                for (int u : s.neighbor_list(v))
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            std::sort(comps.back().begin(), comps.back().end());
        }
        return comps;
    }

    // Biconnected components of the alive subgraph, as sorted vertex sets.
    // A 2-connected minor lives entirely inside one block, so when the state
    // has several, each is searched on its own (everything else deleted).
    std::vector<std::vector<int>> blocks(const PackedState& s) const {
        std::vector<int> disc(s.slots, -1), low(s.slots, 0);
        std::vector<std::pair<int, int>> estack;
        std::vector<std::vector<int>> out;
        int timer = 0;
        std::function<void(int, int)> dfs = [&](int u, int parent) {
            disc[u] = low[u] = timer++;
            for (int v : s.neighbor_list(u)) {
                if (disc[v] == -1) {
                    estack.emplace_back(u, v);
                    dfs(v, u);
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        std::vector<int> block;
                        while (true) {
                            auto [a, b] = estack.back();
                            estack.pop_back();
                            for (int x : {a, b})
                                if (std::find(block.begin(), block.end(), x) == block.end())
                                    block.push_back(x);
                            if (a == u && b == v) break;
                        }
                        std::sort(block.begin(), block.end());
                        out.push_back(std::move(block));
                    }
                } else if (v != parent && disc[v] < disc[u]) {
                    estack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            }
        };
        for (int v : s.alive_vertices())
            if (disc[v] == -1) dfs(v, -1);
        return out;
    }

    // Subgraph embedding of some target into the alive slots.
    bool embed(const PackedState& s) {
        auto verts = s.alive_vertices();
        std::vector<int> sdegs;
        sdegs.reserve(verts.size());
        for (int v : verts) sdegs.push_back(s.degree(v));
        std::sort(sdegs.begin(), sdegs.end(), std::greater<>());
        for (size_t ti = 0; ti < targets.size(); ++ti) {
            const TargetInfo& target = targets[ti];
            if (s.alive_count < target.order || s.edges < target.size) continue;
            // Degree domination precheck.
            bool dominated = true;
            for (int i = 0; i < target.order; ++i)
                if (sdegs[i] < target.degs[target.desc[i]]) {
                    dominated = false;
                    break;
                }
            if (!dominated) continue;
            std::vector<int> image(target.order, -1);
            std::vector<char> used(s.slots, 0);
            if (place(target, s, verts, image, used, 0)) {
                build_certificate(static_cast<int>(ti), image);
                return true;
            }
        }
        return false;
    }

    bool place(const TargetInfo& target, const PackedState& s, const std::vector<int>& verts,
               std::vector<int>& image, std::vector<char>& used, int pos) {
        if (pos == target.order) return true;
        int hv = target.desc[pos];
        for (int cand : verts) {
            if (used[cand] || s.degree(cand) < target.degs[hv]) continue;
            bool ok = true;
            for (int prev = 0; prev < pos; ++prev) {
                int hu = target.desc[prev];
                if (target.graph->has_edge(hu, hv) && !s.adjacent(image[hu], cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[hv] = cand;
            used[cand] = 1;
            if (place(target, s, verts, image, used, pos + 1)) return true;
            image[hv] = -1;
            used[cand] = 0;
        }
        return false;
    }

    void build_certificate(int ti, const std::vector<int>& image) {
        int order = targets[ti].order;
        result.branch_sets.assign(order, {});
        std::vector<int> roots(order);
        for (int hv = 0; hv < order; ++hv) roots[hv] = uf.find(image[hv]);
        for (int w = 0; w < host.order(); ++w) {
            int r = uf.find(w);
            for (int hv = 0; hv < order; ++hv)
                if (roots[hv] == r) {
                    result.branch_sets[hv].push_back(w);
                    break;
                }
        }
        found_target = ti;
    }

    bool rec(PackedState s) {
        size_t mark = uf.mark();
        reduce(s);
        if (s.alive_count < h_order || s.edges < h_size) {
            uf.rollback(mark);
            return false;
        }
        if (!visited.insert(s.fingerprint()).second) {
            uf.rollback(mark);
            return false;
        }
        // Split along blocks (or mere components) when the targets allow it.
        const auto parts = h_biconnected ? blocks(s) : h_connected ? components(s)
                                                                   : std::vector<std::vector<int>>{};
        if (parts.size() > 1) {
            for (const auto& part : parts) {
                if (static_cast<int>(part.size()) < h_order) continue;
                PackedState sub = s;
                for (int v : s.alive_vertices())
                    if (!std::binary_search(part.begin(), part.end(), v)) sub.delete_vertex(v);
                if (sub.edges < h_size) continue;
                if (rec(std::move(sub))) return true;
            }
            uf.rollback(mark);
            return false;
        }
        if (h_nonplanar && is_planar(s.to_graph())) {
            uf.rollback(mark);
            return false;
        }
        uint64_t canon_key = 0;
        bool use_memo = s.alive_count <= 11;
        if (use_memo) {
            canon_key = canonical_key64(s.to_graph());
            if (neg_memo.count(canon_key)) {
                uf.rollback(mark);
                return false;
            }
        }
        if (embed(s)) return true;
        if (s.alive_count > h_order) {
            // Candidate contractions, densest first.
            std::vector<std::tuple<int, int, int>> edges;
            auto verts = s.alive_vertices();
            for (size_t b = 1; b < verts.size(); ++b)
                for (size_t a = 0; a < b; ++a)
                    if (s.adjacent(verts[a], verts[b]))
                        edges.emplace_back(-s.common_neighbors(verts[a], verts[b]), verts[a], verts[b]);
            std::sort(edges.begin(), edges.end());
            for (auto [negc, u, v] : edges) {
                size_t mark2 = uf.mark();
                uf.unite(u, v);
                PackedState child = s;
                child.contract(u, v);
                if (rec(std::move(child))) return true;
                uf.rollback(mark2);
            }
        }
        if (use_memo) neg_memo.insert(canon_key);
        uf.rollback(mark);
        return false;
    }

    // Deterministic contraction descents that usually find the target
    // without touching the exact search. The coverage variant (merge the
    // weakest vertex into the neighbor sharing the fewest neighbors) builds
    // the balanced blocks that near-threshold clique minors need; the dense
    // variants handle targets living in a dense core.
    bool greedy(const PackedState& start) {
        for (int variant = 0; variant < 4; ++variant) {
            size_t mark = uf.mark();
            PackedState s = start;
            while (true) {
                reduce(s);
                if (s.alive_count < h_order || s.edges < h_size) break;
                if (embed(s)) return true;
                if (s.alive_count == h_order) break;
                auto verts = s.alive_vertices();
                int bu = -1, bv = -1;
                long long best = variant <= 1 ? std::numeric_limits<long long>::max() : -1;
                if (variant <= 1) {
                    // Coverage merges: weakest vertex first. variant 0 merges
                    // toward small overlap, variant 1 also prefers the
                    // lowest-degree partner.
                    int u = verts[0];
                    for (int v : verts)
                        if (s.degree(v) < s.degree(u)) u = v;
                    for (int v : s.neighbor_list(u)) {
                        long long score = variant == 0
                                              ? s.common_neighbors(u, v)
                                              : s.common_neighbors(u, v) * 64 + s.degree(v);
                        if (score < best) {
                            best = score;
                            bu = std::min(u, v);
                            bv = std::max(u, v);
                        }
                    }
                } else {
                    for (size_t b = 1; b < verts.size(); ++b)
                        for (size_t a = 0; a < b; ++a) {
                            if (!s.adjacent(verts[a], verts[b])) continue;
                            long long score = variant == 2
                                                  ? s.common_neighbors(verts[a], verts[b])
                                                  : s.degree(verts[a]) + s.degree(verts[b]);
                            if (score > best) {
                                best = score;
                                bu = verts[a];
                                bv = verts[b];
                            }
                        }
                }
                if (bu < 0) break;
                uf.unite(bu, bv);
                s.contract(bu, bv);
            }
            uf.rollback(mark);
        }
        return false;
    }

    bool run() {
        PackedState start(host);
        if (greedy(start)) return true;
        return rec(std::move(start));
    }
};

// Targets with isolated vertices: peel one isolated target vertex and try
// every host vertex as its singleton branch set.
std::optional<MinorCertificate> has_minor_with_isolated(const Graph& g, const Graph& h);

std::optional<MinorCertificate> has_minor_impl(const Graph& g, const Graph& h) {
    if (h.order() == 0) return MinorCertificate{};
    if (g.order() < h.order() || g.size() < h.size()) return std::nullopt;
    auto h_degs = h.degrees();
    if (std::find(h_degs.begin(), h_degs.end(), 0) != h_degs.end()) return has_minor_with_isolated(g, h);
    std::vector<Graph> targets{h};
    MinorSearch search(g, targets);
    if (!search.run()) return std::nullopt;
    return std::move(search.result);
}

std::optional<MinorCertificate> has_minor_with_isolated(const Graph& g, const Graph& h) {
    int iso = -1;
    for (int v = h.order() - 1; v >= 0; --v)
        if (h.degree(v) == 0) {
            iso = v;
            break;
        }
    Graph h2 = h.delete_vertex(iso);
    for (int x = 0; x < g.order(); ++x) {
        auto sub = has_minor_impl(g.delete_vertex(x), h2);
        if (!sub) continue;
        MinorCertificate cert;
        for (auto& set : sub->branch_sets) {
            VertexSet mapped;
            for (int v : set) mapped.push_back(v < x ? v : v + 1);
            cert.branch_sets.push_back(std::move(mapped));
        }
        cert.branch_sets.insert(cert.branch_sets.begin() + iso, VertexSet{x});
        return cert;
    }
    return std::nullopt;
}

}  // namespace

std::optional<MinorCertificate> has_minor(const Graph& g, const Graph& h) {
    auto cert = has_minor_impl(g, h);
    if (cert && !check_minor_certificate(g, h, *cert))
        throw std::logic_error("has_minor: certificate failed independent verification");
    return cert;
}

std::optional<MinorCertificate> has_clique_minor(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("has_clique_minor: r must be positive");
    return has_minor(g, Graph::complete(r));
}

std::optional<std::pair<int, MinorCertificate>> has_any_minor(const Graph& g,
                                                              const std::vector<Graph>& targets) {
    if (targets.empty()) return std::nullopt;
    for (const auto& h : targets) {
        if (h.order() == 0) throw std::invalid_argument("has_any_minor: empty target");
        for (int v = 0; v < h.order(); ++v)
            if (h.degree(v) == 0)
                throw std::invalid_argument("has_any_minor: targets need minimum degree >= 1");
    }
    MinorSearch search(g, targets);
    if (!search.run()) return std::nullopt;
    if (!check_minor_certificate(g, targets[search.found_target], search.result))
        throw std::logic_error("has_any_minor: certificate failed independent verification");
    return std::make_pair(search.found_target, std::move(search.result));
}

Graph delta_y(const Graph& g, int a, int b, int c) {
    if (!(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)))
        throw std::invalid_argument("delta_y: vertices do not span a triangle");
    int n = g.order();
    Graph out(n + 1);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) out.add_edge(i, j);
    out.remove_edge(a, b);
    out.remove_edge(a, c);
    out.remove_edge(b, c);
    out.add_edge(a, n);
    out.add_edge(b, n);
    out.add_edge(c, n);
    return out;
}

Graph y_delta(const Graph& g, int v) {
    if (g.degree(v) != 3) throw std::invalid_argument("y_delta: vertex degree is not 3");
    auto nb = g.neighbors(v);
    Graph out = g;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (!out.has_edge(nb[a], nb[b])) out.add_edge(nb[a], nb[b]);
    return out.delete_vertex(v);
}

std::vector<Graph> delta_y_closure(const Graph& g) {
    std::map<CanonicalCode, Graph> members;
    std::vector<Graph> queue{g};
    members.emplace(canonical_code(g), g);
    while (!queue.empty()) {
        Graph cur = std::move(queue.back());
        queue.pop_back();
        std::vector<Graph> moves;
        int n = cur.order();
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a) {
                if (!cur.has_edge(a, b)) continue;
                for (int c = b + 1; c < n; ++c)
                    if (cur.has_edge(a, c) && cur.has_edge(b, c)) moves.push_back(delta_y(cur, a, b, c));
            }
        for (int v = 0; v < n; ++v)
            if (cur.degree(v) == 3) moves.push_back(y_delta(cur, v));
        for (auto& next : moves) {
            CanonicalCode code = canonical_code(next);
            if (members.emplace(code, next).second) queue.push_back(std::move(next));
        }
        if (members.size() > 10000) throw std::runtime_error("delta_y_closure: closure too large");
    }
    std::vector<Graph> out;
    out.reserve(members.size());
    for (auto& [code, graph] : members) out.push_back(std::move(graph));
    std::stable_sort(out.begin(), out.end(),
                     [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
    return out;
}

const std::vector<Graph>& petersen_family() {
    static const std::vector<Graph> family = [] {
        auto fam = delta_y_closure(Graph::complete(6));
        if (fam.size() != 7) throw std::logic_error("petersen family: expected 7 members");
        bool has_petersen = false;
        for (const auto& g : fam) {
            if (g.size() != 15) throw std::logic_error("petersen family: member with wrong size");
            if (is_planar(g)) throw std::logic_error("petersen family: planar member");
            if (is_isomorphic(g, Graph::petersen())) has_petersen = true;
        }
        if (!has_petersen) throw std::logic_error("petersen family: Petersen graph missing");
        return fam;
    }();
    return family;
}

}  // namespace knotlab
