#ifndef KNOTLAB_EXPERIMENTS_HPP
#define KNOTLAB_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "knotlab/detectors.hpp"
#include "knotlab/graph.hpp"
#include "knotlab/models.hpp"
#include "knotlab/stats.hpp"

namespace knotlab {

/// Which certified detector an experiment drives.
struct PropertySelector {
    enum class Kind { Nonplanar, IL, IK, NotNApex };
    Kind kind = Kind::Nonplanar;
    int apex_k = 1;  // NotNApex only

    static PropertySelector parse(const std::string& name);
    std::string name() const;
    Verdict classify(const Graph& g) const;
    /// Known complement bound for the property, or -1 when none is
    /// established (IK's exact bound is open; 18 is the proven upper bound
    /// the gates use).
    int known_bound() const;
};

/// One aggregated row of a Monte Carlo estimate.
struct EstimateRow {
    int n = 0;
    double param = 0;  // p or c, context-dependent
    uint64_t trials = 0;
    uint64_t successes = 0;
    double fraction = 0;
    Interval ci95;
    double mean_trial_seconds = 0;  // reported on stderr, never in the CSV
};

struct ExperimentResult {
    std::string csv;                 // deterministic artifact (or JSON for searches)
    int exit_code = 0;               // 0 ok, 1 assertion gate failed
    std::vector<std::string> notes;  // timings and observations, for stderr
};

struct IkFractionSpec {
    ModelSpec::Kind model = ModelSpec::Kind::Gilbert;
    double p = 0.5;
    long long M = 0;
    std::vector<int> n_list;
    uint64_t trials = 1000;
    Seed seed;
    bool exhaustive = false;  // iterate the whole unlabelled universe (n <= 9)
    bool weighted = false;    // |Aut|-weighted labelled estimator (unlabelled proxy, any n)
    int jobs = 0;
};
ExperimentResult run_ik_fraction(const IkFractionSpec& spec);

struct ThresholdSpec {
    std::vector<double> c_list;
    std::vector<int> n_list;
    int r = 5;
    uint64_t trials = 1000;
    Seed seed;
    int jobs = 0;
};
ExperimentResult run_threshold_sweep(const ThresholdSpec& spec);

struct TailVsBoundSpec {
    std::vector<int> n_list;
    double p = 0.5;
    uint64_t trials = 100000;
    Seed seed;
    int jobs = 0;
};
ExperimentResult run_tail_vs_bound(const TailVsBoundSpec& spec);

struct PairingFractionSpec {
    int n = 9;
    PropertySelector property;
    bool exhaustive = true;
    uint64_t budget = 10000;  // samples in sampled mode
    Seed seed;
    int jobs = 0;
};
ExperimentResult run_pairing_fraction(const PairingFractionSpec& spec);

struct NotApexFractionSpec {
    int k = 9;       // graph order
    int apex_n = 0;  // deletions allowed
    uint64_t trials = 2000;
    Seed seed;
    int jobs = 0;
    bool override_budget_guard = false;  // default guard: apex_n <= 2, k <= 20
};
ExperimentResult run_not_napex_fraction(const NotApexFractionSpec& spec);

/// Gamma_{n,q} * n! vs C(N,q) for n = 5..8: reports the labelled share
/// C(N,q) / (n! Gamma_{n,q}) in (0,1], approaching 1.
ExperimentResult run_wright_ratio();

struct ComplementSearchSpec {
    int n = 9;
    PropertySelector property;
    bool exhaustive = true;
    uint64_t budget = 10000;
    Seed seed;
    int jobs = 0;
};

struct ComplementFinding {
    std::string graph6;
    std::string complement6;
    std::string status;
    std::string complement_status;
    bool self_complementary = false;
    bool counterexample = false;  // false: candidate only (an Unknown verdict involved)
};

struct ComplementSearchResult {
    uint64_t tested = 0;
    uint64_t passes = 0;
    std::vector<ComplementFinding> findings;
    std::string json;
    std::string csv;
    int exit_code = 0;
    std::vector<std::string> notes;
};

/// Pair search: graphs G for which neither G nor its complement has the
/// property certified. Pairs are tested once (the member with the smaller
/// canonical code); self-complementary graphs are tested alone.
ComplementSearchResult run_complement_search(const ComplementSearchSpec& spec);

}  // namespace knotlab

#endif
