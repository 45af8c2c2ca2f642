#pragma once

#include "wittconic/arith/rational.hpp"

#include <cstdint>

namespace wittconic {

// SplitMix64: state advances by a fixed odd constant and each output is a
// bijective mix of the counter, so streams are reproducible everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi] (modulo bias is irrelevant at these sizes).
    long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

    // p/q with |p| <= height and 1 <= q <= height.
    Rational rational(long height)
    {
        Rational r(uniform(-height, height), uniform(1, height));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long height)
    {
        Rational r;
        do r = rational(height);
        while (r == 0);
        return r;
    }

    // Independent stream for a named sub-task.
    SplitMix64 fork(std::uint64_t salt) { return SplitMix64(next() ^ (salt * 0xD1B54A32D192ED03ULL)); }

private:
    std::uint64_t state_;
};

} // namespace wittconic
