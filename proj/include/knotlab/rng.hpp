#ifndef KNOTLAB_RNG_HPP
#define KNOTLAB_RNG_HPP

#include <cstdint>

namespace knotlab {

struct Seed {
    uint64_t value = 0;
};

/// Counter-based splittable generator. Each (seed, trial) pair gets an
/// independent stream: the state is seeded with two splitmix64 finalizer
/// rounds over seed and trial, and the stream itself is the splitmix64
/// sequence. Pure 64-bit integer arithmetic, so outputs are bit-identical
/// on every platform; streams carry no shared state, so trials can run
/// concurrently.
class Rng {
public:
    Rng(Seed seed, uint64_t trial) {
        state_ = mix(seed.value + 0x9e3779b97f4a7c15ull * (trial + 1));
        state_ = mix(state_ ^ (trial + 0x6a09e667f3bcc909ull));
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); unbiased by rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % bound;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

}  // namespace knotlab

#endif
