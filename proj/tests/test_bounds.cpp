#include "knotlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "knotlab/models.hpp"
#include "oracles.hpp"

using namespace knotlab;

TEST_CASE("exact tail endpoints") {
    for (int n : {7, 12, 20}) CHECK(exact_tail(n, 1.0) == 0.0);
    CHECK(exact_tail(7, 1e-12) > 0.999);
    CHECK_THROWS_AS((void)exact_tail(6, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)exact_tail(20, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)exact_tail(20, 1.5), std::domain_error);
}

TEST_CASE("exact tail matches the big-rational oracle to 1e-9 relative") {
    for (auto [n, p] : std::initializer_list<std::pair<int, double>>{
             {20, 0.5}, {20, 0.3}, {20, 0.7}, {12, 0.5}, {30, 0.5}, {25, 0.45}}) {
        double fast = exact_tail(n, p);
        double exact = oracle::exact_tail_bigint(n, p);
        CHECK(std::abs(fast - exact) <= 1e-9 * std::max(exact, 1e-300));
    }
}

TEST_CASE("exact tail is monotone nonincreasing in p") {
    for (int n : {10, 20, 40}) {
        double prev = 2;
        for (double p : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
            double tail = exact_tail(n, p);
            CHECK(tail <= prev + 1e-15);
            prev = tail;
        }
    }
}

TEST_CASE("hoeffding bound values") {
    // n = 20, p = 1/2: t = 1/2 - 85/190 = 1/19, bound = exp(-380/361).
    double bound = hoeffding_bound(20, 0.5);
    CHECK(std::abs(bound - std::exp(-380.0 / 361.0)) < 1e-12);
    CHECK(std::abs(bound - 0.3490) < 5e-5);

    // t -> 0+ pushes the bound to 1.
    double r_over_n = (5.0 * 20 - 15) / 190.0;
    CHECK(hoeffding_bound(20, r_over_n + 1e-9) > 0.999999);

    // Fixed p = 1/2: strictly decreasing over n = 20, 30, 40.
    CHECK(hoeffding_bound(30, 0.5) < hoeffding_bound(20, 0.5));
    CHECK(hoeffding_bound(40, 0.5) < hoeffding_bound(30, 0.5));

    CHECK_THROWS_AS((void)hoeffding_bound(20, 0.3), std::domain_error);  // t < 0
}

TEST_CASE("hoeffding dominates the exact tail on the grid") {
    for (int n = 10; n <= 60; n += 10)
        for (double p : {0.3, 0.5, 0.7}) {
            double N = static_cast<double>(pair_count(n));
            double t = p - (5.0 * n - 15) / N;
            if (t <= 0) continue;
            CHECK(exact_tail(n, p) <= hoeffding_bound(n, p));
        }
}

TEST_CASE("counting chain checkpoints") {
    CHECK_THROWS_AS((void)counting_chain(17), std::domain_error);

    BoundReport r18 = counting_chain(18);
    CHECK(r18.r == 75);
    CHECK(r18.q == 76);
    CHECK(r18.r < r18.q);
    CHECK(r18.sum_below_count_bound);

    BoundReport r106 = counting_chain(106);
    CHECK(r106.N == 5565);
    CHECK(r106.r == 515);
    CHECK(r106.q == 2782);
    CHECK(r106.q - r106.r == 2267);
    CHECK(r106.gap_exceeds_n2_over_5);      // 2267 > 106^2/5 = 2247.2
    CHECK(r106.ratio_below_three_fifths);   // 2782/5050 < 3/5
    CHECK(r106.power_term_small);
    CHECK(r106.sum_below_count_bound);

    BoundReport r200 = counting_chain(200);
    CHECK(r200.log_final_term < -100.0 * std::log(10.0));
    CHECK(r200.sum_below_count_bound);
    CHECK(r200.power_term_small);
}

TEST_CASE("n! <= n^(n-1), the step the final display uses") {
    for (int n = 1; n <= 2000; ++n)
        CHECK(std::lgamma(n + 1.0) <= (n - 1.0) * std::log(static_cast<double>(n)) + 1e-9);
}

TEST_CASE("complement edge bound") {
    CHECK(complement_edge_bound() == 18);
    // 17 fails: ceil(136/2) = 68 < 71 = 5*17-14. 19 persists: 86 >= 81.
    CHECK((pair_count(17) + 1) / 2 < 5 * 17 - 14);
    CHECK((pair_count(19) + 1) / 2 >= 5 * 19 - 14);
}

TEST_CASE("known bounds table") {
    KnownBounds kb = known_bounds();
    CHECK(kb.n_nonplanar == 9);
    CHECK(kb.n_ik_lo == 13);
    CHECK(kb.n_ik_hi == 18);
    CHECK(kb.n_il_lo == 11);
    CHECK(kb.n_il_hi == 13);
    CHECK(kb.n_not_napex(0) == 9);
    CHECK(kb.n_not_napex(1) == 11);
    CHECK(kb.n_not_napex(2) == 13);
    CHECK(kb.n_not_napex(5) == 19);
}

TEST_CASE("unlabelled size counts are bounded by labelled counts, cumulatively") {
    for (int n = 4; n <= 8; ++n) {
        long long N = pair_count(n);
        long double cum_unl = 0, cum_lab = 0, binom = 1;
        for (long long k = 0; k <= N; ++k) {
            cum_unl += static_cast<long double>(count_unlabelled_by_size(n, static_cast<int>(k)));
            cum_lab += binom;
            CHECK(cum_unl <= cum_lab);
            binom = binom * static_cast<long double>(N - k) / static_cast<long double>(k + 1);
        }
    }
}

TEST_CASE("tail report fills the named symbols") {
    BoundReport rep = tail_report(20, 0.5);
    CHECK(rep.N == 190);
    CHECK(rep.r == 85);
    CHECK(rep.q == 95);
    CHECK(std::abs(rep.t - (0.5 - 85.0 / 190.0)) < 1e-15);
    CHECK(rep.exact_tail > 0);
    CHECK(rep.exact_tail <= rep.hoeffding);
}
