#include "knotlab/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "knotlab/bounds.hpp"
#include "knotlab/parallel.hpp"

using namespace knotlab;

TEST_CASE("trial runner: serial and parallel kernels agree") {
    std::vector<uint64_t> serial(5000, 0), parallel(5000, 0);
    auto work = [](uint64_t t) {
        Rng rng(Seed{17}, t);
        return rng.next_u64() ^ (t * 0x9e3779b97f4a7c15ull);
    };
    run_trials_serial(serial.size(), [&](uint64_t t) { serial[t] = work(t); });
    run_trials_parallel(parallel.size(), 8, [&](uint64_t t) { parallel[t] = work(t); });
    CHECK(serial == parallel);
}

TEST_CASE("experiment output is byte-identical across job counts") {
    IkFractionSpec spec;
    spec.model = ModelSpec::Kind::Gilbert;
    spec.p = 0.5;
    spec.n_list = {8, 12};
    spec.trials = 150;
    spec.seed = Seed{99};

    spec.jobs = 1;
    auto one = run_ik_fraction(spec);
    spec.jobs = 8;
    auto eight = run_ik_fraction(spec);
    CHECK(one.csv == eight.csv);

    ThresholdSpec ts;
    ts.c_list = {0.5, 2.0};
    ts.n_list = {40, 60};
    ts.r = 5;
    ts.trials = 120;
    ts.seed = Seed{4};
    ts.jobs = 1;
    auto t1 = run_threshold_sweep(ts);
    ts.jobs = 8;
    auto t8 = run_threshold_sweep(ts);
    CHECK(t1.csv == t8.csv);
}

TEST_CASE("ik fraction endpoints") {
    IkFractionSpec spec;
    spec.model = ModelSpec::Kind::Gilbert;
    spec.p = 1.0;
    spec.n_list = {7};
    spec.trials = 25;
    spec.seed = Seed{1};
    auto res = run_ik_fraction(spec);
    // Every trial is K_7: certified yes.
    CHECK(res.csv.find("7,gilbert(n=7,p=1),25,25,0,0,1.000000") != std::string::npos);
    CHECK(res.exit_code == 0);
}

TEST_CASE("ik fraction at order 50 is essentially one") {
    // The exact tail at (50, 1/2) is far below 1e-20, so the edge bound
    // certifies virtually every sample.
    IkFractionSpec spec;
    spec.model = ModelSpec::Kind::Gilbert;
    spec.p = 0.5;
    spec.n_list = {50};
    spec.trials = 1000;
    spec.seed = Seed{50};
    auto res = run_ik_fraction(spec);
    CHECK(res.csv.find("50,gilbert(n=50,p=0.5),1000,1000,0,0,1.000000") != std::string::npos);
    CHECK(exact_tail(50, 0.5) < 1e-20);
}

TEST_CASE("ik fraction accounting sums to one") {
    IkFractionSpec spec;
    spec.model = ModelSpec::Kind::UniformUnlabelled;
    spec.n_list = {7};
    spec.exhaustive = true;
    spec.seed = Seed{0};
    auto res = run_ik_fraction(spec);
    // 1044 classes; exactly one of them (K_7 itself) is certified IK.
    CHECK(res.csv.find("7,uniform-unlabelled(n=7),1044,1,") != std::string::npos);
}

TEST_CASE("tail experiment matches the exact tail") {
    TailVsBoundSpec spec;
    spec.n_list = {20};
    spec.p = 0.5;
    spec.trials = 20000;
    spec.seed = Seed{12};
    auto res = run_tail_vs_bound(spec);
    CHECK(res.exit_code == 0);  // exact inside the 99% Wilson interval, tail <= bound
    CHECK_THROWS(run_tail_vs_bound(TailVsBoundSpec{{10}, 0.3, 100, Seed{0}, 1}));  // t <= 0
}

TEST_CASE("threshold experiment separates sub- and supercritical c") {
    ThresholdSpec spec;
    spec.c_list = {0.5, 2.0};
    spec.n_list = {100};
    spec.r = 5;
    spec.trials = 200;
    spec.seed = Seed{7};
    auto res = run_threshold_sweep(spec);
    // Parse the two fractions back out of the CSV.
    double frac[2] = {-1, -1};
    size_t pos = 0;
    for (int row = 0; row < 2; ++row) {
        pos = res.csv.find("\n" + std::string(row == 0 ? "0.5,100," : "2,100,"), pos);
        REQUIRE(pos != std::string::npos);
        // c,n,r,trials,hits,fraction,...
        size_t field = 0, start = pos + 1;
        for (int comma = 0; comma < 5; ++comma) start = res.csv.find(',', start) + 1;
        field = res.csv.find(',', start);
        frac[row] = std::stod(res.csv.substr(start, field - start));
    }
    CHECK(frac[0] < 0.05);
    CHECK(frac[1] > frac[0]);
}

TEST_CASE("pairing fraction: order 4 has no nonplanar graphs") {
    PairingFractionSpec spec;
    spec.n = 4;
    spec.property = PropertySelector::parse("nonplanar");
    spec.exhaustive = true;
    auto res = run_pairing_fraction(spec);
    CHECK(res.csv.find("4,nonplanar,exhaustive,11,0,0.000000") != std::string::npos);
    CHECK(res.exit_code == 0);  // below the bound, gate not armed
}

TEST_CASE("napex budget guard") {
    NotApexFractionSpec spec;
    spec.k = 25;
    spec.apex_n = 1;
    CHECK_THROWS_AS((void)run_not_napex_fraction(spec), std::invalid_argument);
    spec.k = 9;
    spec.apex_n = 3;
    CHECK_THROWS_AS((void)run_not_napex_fraction(spec), std::invalid_argument);
}

TEST_CASE("wright ratio rows sit in (0,1]") {
    auto res = run_wright_ratio();
    CHECK(res.exit_code == 0);
    CHECK(res.csv.find("5,10,5,") != std::string::npos);
    CHECK(res.csv.find("8,28,14,") != std::string::npos);
}

TEST_CASE("complement search at order 6 for nonplanarity") {
    ComplementSearchSpec spec;
    spec.n = 6;
    spec.property = PropertySelector::parse("nonplanar");
    spec.exhaustive = true;
    auto res = run_complement_search(spec);
    // Well below n_NP = 9: pairs with both sides planar exist.
    CHECK(res.exit_code == 0);
    bool some_counterexample = false;
    for (auto& f : res.findings) some_counterexample |= f.counterexample;
    CHECK(some_counterexample);
    CHECK(res.json.find("\"counterexamples\"") != std::string::npos);
}

TEST_CASE("csv headers record the spec and seed") {
    IkFractionSpec spec;
    spec.model = ModelSpec::Kind::Gilbert;
    spec.p = 0.25;
    spec.n_list = {8};
    spec.trials = 10;
    spec.seed = Seed{777};
    auto res = run_ik_fraction(spec);
    CHECK(res.csv.find("seed=777") != std::string::npos);
    CHECK(res.csv.find("p=0.25") != std::string::npos);
    CHECK(res.csv.rfind("# ", 0) == 0);
}
