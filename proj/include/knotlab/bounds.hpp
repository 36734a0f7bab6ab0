#ifndef KNOTLAB_BOUNDS_HPP
#define KNOTLAB_BOUNDS_HPP

#include <limits>

namespace knotlab {

/// Named intermediates of the tail and counting chains. Natural logs
/// throughout; fields that do not apply to a given computation stay NaN.
struct BoundReport {
    int n = 0;
    double p = std::numeric_limits<double>::quiet_NaN();
    long long N = 0;  // n(n-1)/2
    long long r = 0;  // 5n - 15
    long long q = 0;  // floor(N/2)
    double t = std::numeric_limits<double>::quiet_NaN();  // p - r/N

    double exact_tail = std::numeric_limits<double>::quiet_NaN();
    double hoeffding = std::numeric_limits<double>::quiet_NaN();  // e^{-2 t^2 N}

    // Counting chain for the unlabelled model.
    double log_sum_binom_le_r = std::numeric_limits<double>::quiet_NaN();  // log sum_{k<=r} C(N,k)
    double log_count_bound = std::numeric_limits<double>::quiet_NaN();    // log((r+1) C(N,r))
    double log_wright_count = std::numeric_limits<double>::quiet_NaN();   // log(C(N,q)/n!)
    double log_power_term = std::numeric_limits<double>::quiet_NaN();     // (q-r) log(q/(N-r))
    double log_ratio_bound = std::numeric_limits<double>::quiet_NaN();    // log((r+1) n! (q/(N-r))^{q-r})
    double log_final_term = std::numeric_limits<double>::quiet_NaN();     // log((r+1)/n * (n/1.1^n)^n)

    bool sum_below_count_bound = false;   // sum_{k<=r} C(N,k) < (r+1) C(N,r)
    bool gap_exceeds_n2_over_5 = false;   // q - r > n^2/5
    bool ratio_below_three_fifths = false;  // q/(N-r) < 3/5
    bool power_term_small = false;        // (q/(N-r))^{q-r} < 1.1^{-n^2}
};

/// Exact binomial tail Pr[size <= 5n-15] for Gilbert(n, p), log-space
/// summation, relative error below 1e-9. Requires n >= 7 and 0 < p <= 1.
double exact_tail(int n, double p);

/// e^{-2 t^2 N} with t = p - (5n-15)/N. Throws std::domain_error when
/// t <= 0: the inequality needs the mean above the cutoff, and a vacuous 1
/// would hide misuse.
double hoeffding_bound(int n, double p);

/// Tail, Hoeffding and the named symbols for one (n, p) point.
/// hoeffding stays NaN when t <= 0.
BoundReport tail_report(int n, double p);

/// The unlabelled-model counting chain at order n (requires n >= 18 so that
/// r < q). Evaluates every intermediate in log space and records which of
/// the pointwise inequalities hold at this n; the three-fifths and n^2/5
/// comparisons are exact integer arithmetic.
BoundReport counting_chain(int n);

/// Least n >= 7 with ceil(N/2) >= 5n - 14: from that order on, a graph or
/// its complement always has enough edges for the Mader bound. Returns 18.
int complement_edge_bound();

/// Published complement-bound constants plus the 2n+9 generalization.
struct KnownBounds {
    int n_nonplanar = 9;
    int n_not_apex = 11;
    int n_not_2apex = 13;
    int n_ik_lo = 13, n_ik_hi = 18;
    int n_il_lo = 11, n_il_hi = 13;

    /// Upper bound 2n+9 for not-n-apex, improved by the observed values at
    /// n = 0, 1, 2.
    int n_not_napex(int n) const {
        int bound = 2 * n + 9;
        if (n == 0) return n_nonplanar;
        if (n == 1) return n_not_apex < bound ? n_not_apex : bound;
        if (n == 2) return n_not_2apex < bound ? n_not_2apex : bound;
        return bound;
    }
};

KnownBounds known_bounds();

}  // namespace knotlab

#endif
