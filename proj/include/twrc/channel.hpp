#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace twrc {

// Real AWGN at the relay. The working model is unit variance (powers are
// noise-normalized); noiseless() exists for exactness tests.
struct NoiseModel {
    double stddev = 1.0;
    std::uint64_t seed = 0;

    static NoiseModel unit(std::uint64_t seed) { return {1.0, seed}; }
    static NoiseModel noiseless() { return {0.0, 0}; }
};

// y[k] = x1[k] + x2[k] + stddev * n[k], n[k] ~ N(0, 1).
std::vector<double> superimpose_and_noise(std::span<const double> x1,
                                          std::span<const double> x2,
                                          std::mt19937_64& rng, double stddev);

std::vector<double> superimpose_and_noise(std::span<const double> x1,
                                          std::span<const double> x2,
                                          const NoiseModel& nm);

}  // namespace twrc
