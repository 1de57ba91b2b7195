#pragma once

#include <cmath>
#include <random>

namespace tricomi::sampling {

/// Seeded generator for property tests; every test gets the same stream.
inline std::mt19937_64 make_rng(unsigned long long salt = 0) { return std::mt19937_64(0x7269636f6dULL + salt); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// log-uniform on [lo, hi], lo > 0.
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Uniform on [lo, hi] but kept at least `guard` away from every integer.
inline double off_integer(std::mt19937_64& rng, double lo, double hi, double guard = 0.05) {
    for (;;) {
        const double v = uniform(rng, lo, hi);
        if (std::abs(v - std::round(v)) > guard) return v;
    }
}

}  // namespace tricomi::sampling
