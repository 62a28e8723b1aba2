#pragma once

#include "elnet/rational.hpp"

#include <cstdint>
#include <random>

namespace elnet {

// Deterministic sampler: raw mt19937_64 output reduced by modulo, so streams
// are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rational positive(long bound = 9) { return Rational(uniform(1, bound), uniform(1, bound)); }
    Rational nonzero(long bound = 9) {
        long n = uniform(1, bound);
        return Rational(uniform(0, 1) ? n : -n, uniform(1, bound));
    }

private:
    std::mt19937_64 g_;
};

}  // namespace elnet
