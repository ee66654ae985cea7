#pragma once

#include <cstdint>
#include <random>

namespace propg {

// Counted deterministic generator; identical seeds replay identical draws
// on every platform (mt19937_64 output is fixed by the standard).
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : rng_(seed) {}

    uint64_t next() {
        ++count_;
        return rng_();
    }

    // value in [0, bound); bound 0 yields 0
    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    // nonzero value in [-magnitude, magnitude]
    int64_t signed_nonzero(uint64_t magnitude) {
        int64_t v = 1 + static_cast<int64_t>(below(magnitude));
        return (next() & 1) ? v : -v;
    }

    uint64_t draw_count() const { return count_; }

private:
    std::mt19937_64 rng_;
    uint64_t count_ = 0;
};

} // namespace propg
