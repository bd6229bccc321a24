#include "twrc/channel.hpp"

#include <stdexcept>

namespace twrc {

std::vector<double> superimpose_and_noise(std::span<const double> x1,
                                          std::span<const double> x2,
                                          std::mt19937_64& rng, double stddev) {
    if (x1.size() != x2.size())
        throw std::domain_error("superimpose_and_noise: length mismatch");
    if (stddev < 0.0)
        throw std::domain_error("superimpose_and_noise: stddev must be >= 0");
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<double> y(x1.size());
    for (std::size_t k = 0; k < y.size(); ++k)
        y[k] = x1[k] + x2[k] + stddev * noise(rng);
    return y;
}

std::vector<double> superimpose_and_noise(std::span<const double> x1,
                                          std::span<const double> x2,
                                          const NoiseModel& nm) {
    std::mt19937_64 rng(nm.seed);
    return superimpose_and_noise(x1, x2, rng, nm.stddev);
}

}  // namespace twrc
