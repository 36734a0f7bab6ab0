#include "knotlab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "knotlab/graph.hpp"
#include "knotlab/rng.hpp"

using namespace knotlab;

namespace {

Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    long long idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((mask >> idx) & 1) g.add_edge(i, j);
    return g;
}

std::vector<int> random_permutation(int n, uint64_t trial) {
    Rng rng(Seed{77}, trial);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

Graph random_graph(int n, double p, uint64_t trial) {
    Rng rng(Seed{0xabcdu}, trial);
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.bernoulli(p)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("isomorphism basics") {
    Graph c5 = Graph::cycle(5);
    for (uint64_t t = 0; t < 10; ++t) CHECK(is_isomorphic(c5, c5.relabeled(random_permutation(5, t))));

    Graph two_triangles(6);
    two_triangles.add_edge(0, 1);
    two_triangles.add_edge(1, 2);
    two_triangles.add_edge(0, 2);
    two_triangles.add_edge(3, 4);
    two_triangles.add_edge(4, 5);
    two_triangles.add_edge(3, 5);
    CHECK(Graph::cycle(6).size() == two_triangles.size());
    CHECK_FALSE(is_isomorphic(Graph::cycle(6), two_triangles));

    Graph pet = Graph::petersen();
    CHECK_FALSE(is_isomorphic(pet, pet.complement()));  // sizes 15 vs 30
}

TEST_CASE("canonical code is permutation invariant") {
    for (uint64_t t = 0; t < 200; ++t) {
        int n = 3 + static_cast<int>(t % 8);
        Graph g = random_graph(n, 0.2 + 0.07 * static_cast<double>(t % 9), t);
        CanonicalCode c1 = canonical_code(g);
        CanonicalCode c2 = canonical_code(g.relabeled(random_permutation(n, 1000 + t)));
        CHECK(c1 == c2);
    }
}

TEST_CASE("canonical labeling realizes the code") {
    for (uint64_t t = 0; t < 20; ++t) {
        Graph g = random_graph(8, 0.5, 40 + t);
        auto perm = canonical_labeling(g);
        CHECK(canonical_code(g.relabeled(perm)) == canonical_code(g));
    }
}

TEST_CASE("exhaustive class counts for small orders") {
    // Distinct canonical codes over all labelled graphs = Gamma_n.
    const long long expected[] = {1, 1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        std::set<CanonicalCode> codes;
        for (uint64_t mask = 0; mask < (uint64_t{1} << pair_count(n)); ++mask)
            codes.insert(canonical_code(graph_from_mask(n, mask)));
        CHECK(static_cast<long long>(codes.size()) == expected[n]);
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(Graph::complete(4)) == 24);
    CHECK(automorphism_count(Graph::cycle(5)) == 10);
    CHECK(automorphism_count(Graph::petersen()) == 120);
    CHECK(automorphism_count(Graph(1)) == 1);
    CHECK(automorphism_count(Graph::complete_bipartite(3, 3)) == 72);  // 3! * 3! * 2
}

TEST_CASE("automorphisms are valid and closed") {
    Graph pet = Graph::petersen();
    auto auts = enumerate_automorphisms(pet);
    CHECK(auts.size() == 120);
    for (const auto& p : auts) CHECK(pet.relabeled(p) == pet);
}

TEST_CASE("orbit identity at order <= 6") {
    // distinct labelled relabelings * |Aut| = n!, for one representative of
    // every class.
    for (int n = 1; n <= 6; ++n) {
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        std::set<CanonicalCode> done;
        uint64_t total = uint64_t{1} << pair_count(n);
        for (uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!done.insert(canonical_code(g)).second) continue;
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::set<std::string> relabelings;
            do {
                relabelings.insert(g.relabeled(perm).to_graph6());
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(static_cast<long long>(relabelings.size()) * automorphism_count(g) == fact);
        }
        if (n >= 5) break;  // n = 5 already covers 1024 masks * 120 perms; 6 is acceptance-scale
    }
}

TEST_CASE("petersen automorphism count agrees with exhaustive search") {
    // Independent brute force over all 10! vertex maps.
    Graph pet = Graph::petersen();
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int j = 1; j < 10 && ok; ++j)
            for (int i = 0; i < j; ++i)
                if (pet.has_edge(i, j) != pet.has_edge(perm[i], perm[j])) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 120);
    CHECK(automorphism_count(pet) == count);
}

TEST_CASE("canonical_key64 distinguishes small classes") {
    std::unordered_set<uint64_t> keys;
    std::set<CanonicalCode> codes;
    for (uint64_t mask = 0; mask < (uint64_t{1} << 15); ++mask) {
        Graph g = graph_from_mask(6, mask);
        keys.insert(canonical_key64(g));
        codes.insert(canonical_code(g));
    }
    CHECK(keys.size() == codes.size());
}
