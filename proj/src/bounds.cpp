#include "knotlab/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace knotlab {

namespace {

double log_binom(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

// log(sum exp(terms)), compensated summation after factoring out the max.
double log_sum_exp(const std::vector<double>& terms) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double t : terms) mx = std::max(mx, t);
    if (!std::isfinite(mx)) return mx;
    double sum = 0, comp = 0;
    for (double t : terms) {
        double y = std::exp(t - mx) - comp;
        double next = sum + y;
        comp = (next - sum) - y;
        sum = next;
    }
    return mx + std::log(sum);
}

void check_tail_domain(int n, double p) {
    if (n < 7) throw std::domain_error("tail bound: requires n >= 7");
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("tail bound: requires 0 < p <= 1");
}

}  // namespace

double exact_tail(int n, double p) {
    check_tail_domain(n, p);
    long long N = static_cast<long long>(n) * (n - 1) / 2;
    long long r = 5LL * n - 15;
    if (r >= N) return 1.0;  // unreachable for n >= 7, kept for safety
    if (p == 1.0) return 0.0;
    double lp = std::log(p);
    double lq = std::log1p(-p);
    std::vector<double> terms;
    terms.reserve(r + 1);
    for (long long k = 0; k <= r; ++k)
        terms.push_back(log_binom(N, k) + static_cast<double>(k) * lp + static_cast<double>(N - k) * lq);
    double logtail = log_sum_exp(terms);
    return logtail >= 0 ? 1.0 : std::exp(logtail);
}

double hoeffding_bound(int n, double p) {
    check_tail_domain(n, p);
    double N = static_cast<double>(n) * (n - 1) / 2;
    double t = p - static_cast<double>(5 * n - 15) / N;
    if (t <= 0)
        throw std::domain_error("hoeffding_bound: inapplicable, needs t = p - (5n-15)/N > 0");
    return std::exp(-2.0 * t * t * N);
}

BoundReport tail_report(int n, double p) {
    check_tail_domain(n, p);
    BoundReport rep;
    rep.n = n;
    rep.p = p;
    rep.N = static_cast<long long>(n) * (n - 1) / 2;
    rep.r = 5LL * n - 15;
    rep.q = rep.N / 2;
    rep.t = p - static_cast<double>(rep.r) / static_cast<double>(rep.N);
    rep.exact_tail = exact_tail(n, p);
    if (rep.t > 0) rep.hoeffding = std::exp(-2.0 * rep.t * rep.t * static_cast<double>(rep.N));
    return rep;
}

BoundReport counting_chain(int n) {
    if (n < 18) throw std::domain_error("counting_chain: requires n >= 18 so that r < q");
    BoundReport rep;
    rep.n = n;
    rep.N = static_cast<long long>(n) * (n - 1) / 2;
    rep.r = 5LL * n - 15;
    rep.q = rep.N / 2;

    std::vector<double> terms;
    terms.reserve(rep.r + 1);
    for (long long k = 0; k <= rep.r; ++k) terms.push_back(log_binom(rep.N, k));
    rep.log_sum_binom_le_r = log_sum_exp(terms);
    rep.log_count_bound = std::log(static_cast<double>(rep.r + 1)) + log_binom(rep.N, rep.r);
    rep.sum_below_count_bound = rep.log_sum_binom_le_r < rep.log_count_bound;

    double log_nfact = std::lgamma(static_cast<double>(n) + 1);
    rep.log_wright_count = log_binom(rep.N, rep.q) - log_nfact;

    rep.log_power_term = static_cast<double>(rep.q - rep.r) *
                         (std::log(static_cast<double>(rep.q)) - std::log(static_cast<double>(rep.N - rep.r)));
    rep.log_ratio_bound =
        std::log(static_cast<double>(rep.r + 1)) + log_nfact + rep.log_power_term;

    // (q - r) > n^2/5 and q/(N-r) < 3/5, both as exact integer comparisons.
    rep.gap_exceeds_n2_over_5 = 5 * (rep.q - rep.r) > static_cast<long long>(n) * n;
    rep.ratio_below_three_fifths = 5 * rep.q < 3 * (rep.N - rep.r);
    rep.power_term_small =
        rep.log_power_term < -static_cast<double>(n) * n * std::log(1.1);

    // (r+1)/n * (n / 1.1^n)^n; the step from (r+1) n!/(1.1^n)^n uses
    // n! <= n^{n-1}.
    rep.log_final_term = std::log(static_cast<double>(rep.r + 1)) - std::log(static_cast<double>(n)) +
                         static_cast<double>(n) * (std::log(static_cast<double>(n)) -
                                                   static_cast<double>(n) * std::log(1.1));
    return rep;
}

int complement_edge_bound() {
    for (int n = 7;; ++n) {
        long long N = static_cast<long long>(n) * (n - 1) / 2;
        if ((N + 1) / 2 >= 5LL * n - 14) return n;
    }
}

KnownBounds known_bounds() { return {}; }

}  // namespace knotlab
