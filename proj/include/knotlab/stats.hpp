#ifndef KNOTLAB_STATS_HPP
#define KNOTLAB_STATS_HPP

#include <cmath>

namespace knotlab {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool contains(double x) const { return lo <= x && x <= hi; }
};

inline constexpr double kZ95 = 1.9599639845400545;
inline constexpr double kZ99 = 2.5758293035489004;

/// Wilson score interval; stable near fractions of 0 and 1.
inline Interval wilson(long long successes, long long trials, double z) {
    if (trials <= 0) return {0.0, 1.0};
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    double lo = center - half, hi = center + half;
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    return {lo, hi};
}

}  // namespace knotlab

#endif
