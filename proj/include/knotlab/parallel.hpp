#ifndef KNOTLAB_PARALLEL_HPP
#define KNOTLAB_PARALLEL_HPP

#include <cstdint>

#include <omp.h>

namespace knotlab {

inline int effective_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

/// Serial reference kernel: kept alongside the OpenMP version so tests and
/// the benchmark can compare the two directly.
template <class Fn>
void run_trials_serial(uint64_t trials, Fn&& fn) {
    for (uint64_t t = 0; t < trials; ++t) fn(t);
}

/// OpenMP kernel over independent trials. fn(t) must write only to
/// trial-indexed slots; aggregation over those slots is then identical for
/// every job count, which is what makes experiment output byte-stable.
template <class Fn>
void run_trials_parallel(uint64_t trials, int jobs, Fn&& fn) {
    jobs = effective_jobs(jobs);
    if (jobs <= 1 || trials < 2) {
        run_trials_serial(trials, fn);
        return;
    }
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
    for (long long t = 0; t < static_cast<long long>(trials); ++t) fn(static_cast<uint64_t>(t));
}

}  // namespace knotlab

#endif
