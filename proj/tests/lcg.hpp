#pragma once

// Deterministic pseudo-random values for property-style tests.

#include "mckcert/rational.hpp"

#include <cstdint>

namespace testrand {

class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }

    // uniform in [0, bound)
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    // small rational with numerator in [-max, max] and denominator in [1, dmax]
    mck::exact::Rat rat(int max = 6, int dmax = 4) {
        int num = below(2 * max + 1) - max;
        int den = below(dmax) + 1;
        return mck::exact::Rat(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace testrand
