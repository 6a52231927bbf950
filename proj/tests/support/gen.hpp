// gen.hpp — Seeded generators for property tests

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "mirrorcoh/model.hpp"

namespace mirrorcoh::gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Three nonnegative weights summing to one, drawn uniformly on the simplex.
    PolarizationWeights polarization() {
        const double e1 = -std::log(uniform(1e-12, 1.0));
        const double e2 = -std::log(uniform(1e-12, 1.0));
        const double e3 = -std::log(uniform(1e-12, 1.0));
        const double s = e1 + e2 + e3;
        const double ax = e1 / s;
        const double ay = e2 / s;
        return {ax, ay, 1.0 - ax - ay};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace mirrorcoh::gen
