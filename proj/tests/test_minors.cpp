#include "knotlab/minors.hpp"

#include "doctest.h"
#include "knotlab/canonical.hpp"
#include "knotlab/models.hpp"
#include "knotlab/planarity.hpp"
#include "knotlab/rng.hpp"
#include "oracles.hpp"

using namespace knotlab;

namespace {

Graph random_graph(int n, double p, uint64_t trial) {
    return sample(ModelSpec::gilbert(n, p), Seed{0x3c3cu}, trial);
}

Graph k8_minus_perfect_matching() {
    Graph g = Graph::complete(8);
    for (int i = 0; i < 8; i += 2) g.remove_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("certificate checker accepts valid and rejects corrupted certificates") {
    Graph g = Graph::petersen();
    auto cert = has_minor(g, Graph::complete(5));
    REQUIRE(cert.has_value());
    CHECK(check_minor_certificate(g, Graph::complete(5), *cert));

    MinorCertificate bad = *cert;
    bad.branch_sets[0].push_back(bad.branch_sets[1][0]);  // overlap
    CHECK_FALSE(check_minor_certificate(g, Graph::complete(5), bad));

    MinorCertificate empty_set = *cert;
    empty_set.branch_sets[2].clear();
    CHECK_FALSE(check_minor_certificate(g, Graph::complete(5), empty_set));

    // Disconnected branch set: two outer vertices at distance two.
    MinorCertificate disconnected;
    disconnected.branch_sets = {{0, 2}, {1}, {3}, {4}, {5}};
    CHECK_FALSE(check_minor_certificate(g, Graph::complete(5), disconnected));

    // Wrong set count.
    MinorCertificate short_cert = *cert;
    short_cert.branch_sets.pop_back();
    CHECK_FALSE(check_minor_certificate(g, Graph::complete(5), short_cert));
}

TEST_CASE("minor containment basics") {
    CHECK(has_minor(Graph::complete(7), Graph::complete(7)).has_value());
    CHECK_FALSE(has_minor(Graph::complete(6), Graph::complete(7)).has_value());
    CHECK_FALSE(has_minor(Graph::petersen(), Graph::complete(6)).has_value());
    CHECK(has_minor(Graph::petersen(), Graph::complete(5)).has_value());

    // Isolated vertices in the target.
    Graph k3_plus_iso(4);
    k3_plus_iso.add_edge(0, 1);
    k3_plus_iso.add_edge(1, 2);
    k3_plus_iso.add_edge(0, 2);
    Graph host_with_room(4);
    host_with_room.add_edge(0, 1);
    host_with_room.add_edge(1, 2);
    host_with_room.add_edge(0, 2);
    CHECK(has_minor(host_with_room, k3_plus_iso).has_value());
    CHECK_FALSE(has_minor(Graph::complete(3), k3_plus_iso).has_value());
    CHECK(has_minor(Graph::complete(4), k3_plus_iso).has_value());
    CHECK(has_minor(Graph::complete(3), Graph(0)).has_value());
    CHECK(has_minor(Graph(2), Graph(1)).has_value());
}

TEST_CASE("subdivided K_4 still contains K_4") {
    // K_4 with one edge subdivided; the case that defeats contract-or-delete
    // branching on the wrong edge.
    Graph g(5);
    g.add_edge(0, 4);
    g.add_edge(4, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    auto cert = has_minor(g, Graph::complete(4));
    REQUIRE(cert.has_value());
    CHECK(check_minor_certificate(g, Graph::complete(4), *cert));
}

TEST_CASE("clique minors") {
    for (uint64_t t = 0; t < 10; ++t) {
        Graph g = random_graph(10, 0.3, t);
        if (is_planar(g)) CHECK_FALSE(has_clique_minor(g, 5).has_value());
    }
    CHECK(has_clique_minor(Graph::complete(7), 7).has_value());
    CHECK_THROWS(has_clique_minor(Graph::complete(3), 0));

    // K_8 minus a perfect matching is the complete 4-partite K_{2,2,2,2}:
    // a K_7 minor would need six pairwise-adjacent singleton branch sets,
    // but the largest clique has four vertices. The brute-force oracle
    // agrees that the minor is absent.
    Graph k8pm = k8_minus_perfect_matching();
    CHECK(is_isomorphic(k8pm, Graph::complete_multipartite({2, 2, 2, 2})));
    oracle::MinorOracle k7(Graph::complete(7));
    CHECK_FALSE(k7.contains(k8pm));
    CHECK_FALSE(has_clique_minor(k8pm, 7).has_value());
    CHECK(has_clique_minor(k8pm, 6).has_value());

    // K_9 minus a perfect matching (one vertex left alone) meets the Mader
    // bound 5*9-14 = 31 with 32 edges and has the K_7 minor.
    Graph k9pm = Graph::complete(9);
    for (int i = 0; i < 8; i += 2) k9pm.remove_edge(i, i + 1);
    CHECK(k9pm.size() == 32);
    CHECK(mader_certifies(k9pm));
    CHECK(has_clique_minor(k9pm, 7).has_value());
}

TEST_CASE("mader edge bound") {
    Graph g18(18);
    for (long long e = 0; e < 77; ++e) {
        auto [i, j] = pair_from_index(e);
        g18.add_edge(i, j);
    }
    CHECK(mader_certifies(g18));
    Graph g76(18);
    for (long long e = 0; e < 76; ++e) {
        auto [i, j] = pair_from_index(e);
        g76.add_edge(i, j);
    }
    CHECK(mader_certifies(g76));  // 76 = 5*18-14 exactly
    CHECK_FALSE(mader_certifies(Graph::complete(6)));  // order below 7
}

TEST_CASE("mader-dense random graphs always yield verified K_7 certificates") {
    Seed seed{31};
    int found = 0;
    for (uint64_t t = 0; t < 300; ++t) {
        int n = 8 + static_cast<int>(t % 3);
        long long target = 5LL * n - 14 + static_cast<long long>(t % 4);
        if (target > pair_count(n)) continue;
        Graph g = sample(ModelSpec::erdos_renyi(n, target), seed, t);
        REQUIRE(mader_certifies(g));
        auto cert = has_clique_minor(g, 7);
        REQUIRE(cert.has_value());
        CHECK(check_minor_certificate(g, Graph::complete(7), *cert));
        ++found;
    }
    CHECK(found > 200);
}

TEST_CASE("implementation matches brute-force oracle on small hosts") {
    // All order-6 classes against K_4 and K_5.
    for (int r : {4, 5}) {
        oracle::MinorOracle oracle_r(Graph::complete(r));
        enumerate_unlabelled(6, [&](const Graph& g) {
            CHECK(has_clique_minor(g, r).has_value() == oracle_r.contains(g));
        });
    }
}

TEST_CASE("minor relation is transitive on random chains") {
    Rng rng(Seed{59}, 3);
    for (uint64_t t = 0; t < 12; ++t) {
        Graph g = random_graph(9, 0.6, 500 + t);
        // Random minor H of G: a few deletions/contractions.
        Graph h = g;
        for (int step = 0; step < 3 && h.size() > 0; ++step) {
            int choice = static_cast<int>(rng.below(3));
            if (choice == 0 && h.order() > 1) {
                h = h.delete_vertex(static_cast<int>(rng.below(h.order())));
            } else {
                std::vector<std::pair<int, int>> edges;
                for (int j = 1; j < h.order(); ++j)
                    for (int i = 0; i < j; ++i)
                        if (h.has_edge(i, j)) edges.emplace_back(i, j);
                if (edges.empty()) break;
                auto [i, j] = edges[rng.below(edges.size())];
                h = choice == 1 ? h.delete_edge(i, j) : h.contract_edge(i, j);
            }
        }
        Graph jg = h;
        if (jg.order() > 1) jg = jg.delete_vertex(0);
        if (jg.order() == 0) continue;
        CHECK(has_minor(g, h).has_value());
        CHECK(has_minor(h, jg).has_value());
        CHECK(has_minor(g, jg).has_value());
    }
}

TEST_CASE("delta-wye moves") {
    // Contracting any edge of C_4 gives a triangle; delta-y on K_4 gives K_{2,3}.
    Graph k4 = Graph::complete(4);
    Graph dy = delta_y(k4, 0, 1, 2);
    CHECK(dy.order() == 5);
    CHECK(dy.size() == 6);
    CHECK(is_isomorphic(dy, Graph::complete_bipartite(2, 3)));
    CHECK(is_isomorphic(y_delta(dy, 4), k4));
    CHECK_THROWS(delta_y(Graph::cycle(4), 0, 1, 2));
    CHECK_THROWS(y_delta(Graph::cycle(4), 0));  // degree 2, not 3
}

TEST_CASE("y-delta on K_4 is legal and gives K_3") {
    // Each K_4 vertex has degree 3; replacing it by a triangle on its
    // (already adjacent) neighbors keeps the graph simple: K_3.
    Graph res = y_delta(Graph::complete(4), 0);
    CHECK(is_isomorphic(res, Graph::complete(3)));
}

TEST_CASE("closure of K_4 is a finite fixed family containing K_4") {
    auto closure = delta_y_closure(Graph::complete(4));
    bool has_k4 = false;
    for (const auto& g : closure) has_k4 |= is_isomorphic(g, Graph::complete(4));
    CHECK(has_k4);
    CHECK(closure.size() == 4);  // K_4, K_{2,3}, K_3, K_{1,3}
}

TEST_CASE("petersen family") {
    const auto& family = petersen_family();
    REQUIRE(family.size() == 7);
    bool has_petersen = false, has_k6 = false;
    for (size_t i = 0; i < family.size(); ++i) {
        CHECK(family[i].size() == 15);
        CHECK_FALSE(is_planar(family[i]));
        for (size_t j = i + 1; j < family.size(); ++j)
            CHECK_FALSE(is_isomorphic(family[i], family[j]));
        has_petersen |= is_isomorphic(family[i], Graph::petersen());
        has_k6 |= is_isomorphic(family[i], Graph::complete(6));
    }
    CHECK(has_petersen);
    CHECK(has_k6);
}

TEST_CASE("sparse reductions do not change answers") {
    // Attach trees and subdivide edges: K_4 containment must be unaffected.
    for (uint64_t t = 0; t < 10; ++t) {
        Graph core = random_graph(7, 0.5, 700 + t);
        bool expected = has_clique_minor(core, 4).has_value();
        // Subdivide one edge and hang a path off vertex 0.
        Graph g(core.order() + 3);
        bool subdivided = false;
        for (int j = 1; j < core.order(); ++j)
            for (int i = 0; i < j; ++i) {
                if (!core.has_edge(i, j)) continue;
                if (!subdivided) {
                    g.add_edge(i, core.order());
                    g.add_edge(core.order(), j);
                    subdivided = true;
                } else {
                    g.add_edge(i, j);
                }
            }
        g.add_edge(0, core.order() + 1);
        g.add_edge(core.order() + 1, core.order() + 2);
        if (!subdivided) continue;
        CHECK(has_clique_minor(g, 4).has_value() == expected);
    }
}
