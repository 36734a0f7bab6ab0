#include "knotlab/models.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "knotlab/canonical.hpp"

using namespace knotlab;

TEST_CASE("degenerate samplers") {
    Seed s{42};
    for (uint64_t t = 0; t < 5; ++t) {
        CHECK(sample(ModelSpec::gilbert(6, 1.0), s, t) == Graph::complete(6));
        CHECK(sample(ModelSpec::gilbert(6, 0.0), s, t) == Graph(6));
        CHECK(sample(ModelSpec::erdos_renyi(5, 10), s, t) == Graph::complete(5));
        CHECK(sample(ModelSpec::erdos_renyi(5, 0), s, t) == Graph(5));
    }
}

TEST_CASE("erdos-renyi draws exactly M edges") {
    Seed s{7};
    for (long long M : {1, 7, 20, 35, 45}) {
        for (uint64_t t = 0; t < 40; ++t) CHECK(sample(ModelSpec::erdos_renyi(10, M), s, t).size() == M);
    }
}

TEST_CASE("gilbert mean size within four standard errors") {
    Seed s{11};
    int n = 12;
    double p = 0.3;
    int trials = 4000;
    double N = static_cast<double>(pair_count(n));
    double total = 0;
    for (int t = 0; t < trials; ++t) total += sample(ModelSpec::gilbert(n, p), s, t).size();
    double mean = total / trials;
    double se = std::sqrt(N * p * (1 - p) / trials);
    CHECK(std::abs(mean - p * N) <= 4 * se);
}

TEST_CASE("sampling is deterministic in (spec, seed, trial)") {
    auto spec = ModelSpec::gilbert(15, 0.4);
    for (uint64_t t = 0; t < 10; ++t) {
        CHECK(sample(spec, Seed{123}, t) == sample(spec, Seed{123}, t));
    }
    CHECK_FALSE(sample(spec, Seed{123}, 0) == sample(spec, Seed{123}, 1));
    CHECK_FALSE(sample(spec, Seed{123}, 0) == sample(spec, Seed{124}, 0));
}

TEST_CASE("gamma counts for small orders") {
    const long long expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(count_unlabelled(n) == expected[n]);
}

TEST_CASE("enumeration yields pairwise non-isomorphic representatives") {
    std::set<CanonicalCode> codes;
    enumerate_unlabelled(6, [&](const Graph& g) {
        CHECK(g.order() == 6);
        CHECK(codes.insert(canonical_code(g)).second);
    });
    CHECK(codes.size() == 156);
}

TEST_CASE("size-restricted counts") {
    CHECK(count_unlabelled_by_size(4, 0) == 1);
    CHECK(count_unlabelled_by_size(4, 3) == 3);  // path, star, triangle+isolated
    for (int n = 2; n <= 7; ++n) {
        long long total = 0;
        long long N = pair_count(n);
        for (int k = 0; k <= N; ++k) {
            long long c = count_unlabelled_by_size(n, k);
            CHECK(c == count_unlabelled_by_size(n, static_cast<int>(N) - k));
            total += c;
        }
        CHECK(total == count_unlabelled(n));
    }
}

TEST_CASE("uniform unlabelled sampling is uniform at order 4") {
    Seed s{2024};
    auto spec = ModelSpec::uniform_unlabelled(4);
    std::map<std::string, int> hits;
    int trials = 110000;
    for (int t = 0; t < trials; ++t) hits[canonical_code(sample(spec, s, t)).bytes]++;
    CHECK(hits.size() == 11);
    double expect = trials / 11.0;
    double sigma = std::sqrt(trials * (1.0 / 11) * (10.0 / 11));
    for (auto& [code, count] : hits) CHECK(std::abs(count - expect) <= 3 * sigma);
}

TEST_CASE("unlabelled sampling above the cap is rejected") {
    CHECK_THROWS_AS((void)ModelSpec::uniform_unlabelled(10), std::invalid_argument);
    CHECK_THROWS_AS((void)count_unlabelled(10), std::invalid_argument);
}

TEST_CASE("unlabelled weights") {
    CHECK(unlabelled_weight(Graph::complete(6)) == 720);
    // Smallest asymmetric graphs appear at order 6.
    bool found_asymmetric = false;
    enumerate_unlabelled(6, [&](const Graph& g) {
        if (unlabelled_weight(g) == 1) found_asymmetric = true;
    });
    CHECK(found_asymmetric);
}

TEST_CASE("aut-weighted labelled estimator matches enumeration at order 4") {
    // E_lab[f * |Aut|] / E_lab[|Aut|] = E_unl[f], with f = [size == 3].
    Seed s{5};
    auto spec = ModelSpec::uniform_labelled(4);
    int trials = 60000;
    double num = 0, den = 0;
    for (int t = 0; t < trials; ++t) {
        Graph g = sample(spec, s, t);
        double w = static_cast<double>(unlabelled_weight(g));
        if (g.size() == 3) num += w;
        den += w;
    }
    double estimate = num / den;
    double exact = 3.0 / 11.0;  // Gamma_{4,3} / Gamma_4
    CHECK(std::abs(estimate - exact) < 0.02);
}
