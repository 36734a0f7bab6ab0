// Benchmark: the Monte Carlo kernels, serial reference vs OpenMP.
//
// Each kernel runs the same trial-indexed work through run_trials_serial and
// run_trials_parallel, checks that the aggregated counts agree exactly, and
// reports wall time and speedup.
//
//   ./bench_kernels [jobs]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "knotlab/detectors.hpp"
#include "knotlab/minors.hpp"
#include "knotlab/models.hpp"
#include "knotlab/parallel.hpp"

using namespace knotlab;

namespace {

struct Kernel {
    std::string name;
    uint64_t trials;
    std::function<uint8_t(uint64_t)> work;
};

double time_run(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 0;
    jobs = effective_jobs(jobs);
    Seed seed{2718};

    // Warm the shared caches outside the timed regions.
    petersen_family();

    std::vector<Kernel> kernels;
    kernels.push_back({"tail (gilbert n=60 p=0.5, size count)", 20000, [&](uint64_t t) {
                           Graph g = sample(ModelSpec::gilbert(60, 0.5), seed, t);
                           return static_cast<uint8_t>(g.size() <= 5 * 60 - 15);
                       }});
    kernels.push_back({"ik classify (gilbert n=18 p=0.5)", 2000, [&](uint64_t t) {
                           Graph g = sample(ModelSpec::gilbert(18, 0.5), seed, t);
                           return static_cast<uint8_t>(classify_IK(g).status == Status::CertifiedYes);
                       }});
    kernels.push_back({"threshold (K_5 minor, n=200 c=2)", 400, [&](uint64_t t) {
                           Graph g = sample(ModelSpec::gilbert(200, 2.0 / 200), seed, t);
                           return static_cast<uint8_t>(has_clique_minor(g, 5).has_value());
                       }});
    kernels.push_back({"2-apex search (uniform-labelled n=13)", 800, [&](uint64_t t) {
                           Graph g = sample(ModelSpec::uniform_labelled(13), seed, t);
                           return static_cast<uint8_t>(
                               classify_not_n_apex(g, 2).status == Status::CertifiedYes);
                       }});

    std::printf("%-42s %10s %10s %8s %s\n", "kernel", "serial(s)", "omp(s)", "speedup", "agree");
    for (auto& kernel : kernels) {
        std::vector<uint8_t> serial(kernel.trials, 0), parallel(kernel.trials, 0);
        double ts = time_run([&] {
            run_trials_serial(kernel.trials, [&](uint64_t t) { serial[t] = kernel.work(t); });
        });
        double tp = time_run([&] {
            run_trials_parallel(kernel.trials, jobs,
                                [&](uint64_t t) { parallel[t] = kernel.work(t); });
        });
        bool agree = serial == parallel;
        std::printf("%-42s %10.3f %10.3f %7.2fx %s\n", kernel.name.c_str(), ts, tp, ts / tp,
                    agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    std::printf("jobs=%d\n", jobs);
    return 0;
}
