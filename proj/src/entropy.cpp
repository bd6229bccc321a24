#include "twrc/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace twrc {

namespace {

constexpr double kNormTol = 1e-9;

void check_pmf(std::span<const double> pmf, const char* what) {
    double sum = 0.0;
    for (double p : pmf) {
        if (!(p >= 0.0)) throw std::domain_error(what);
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormTol) throw std::domain_error(what);
}

double neg_p_log2_p(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

std::vector<double> JointPmf::marginal_x() const {
    std::vector<double> m(nx, 0.0);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) m[x] += at(x, y);
    return m;
}

std::vector<double> JointPmf::marginal_y() const {
    std::vector<double> m(ny, 0.0);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) m[y] += at(x, y);
    return m;
}

double entropy(std::span<const double> pmf) {
    check_pmf(pmf, "entropy: pmf must be nonnegative and sum to 1");
    double h = 0.0;
    for (double p : pmf) h += neg_p_log2_p(p);
    return h;
}

double conditional_entropy(const JointPmf& joint) {
    check_pmf(joint.p, "conditional_entropy: joint must be nonnegative and sum to 1");
    double h = 0.0;
    for (std::size_t x = 0; x < joint.nx; ++x) {
        double px = 0.0;
        for (std::size_t y = 0; y < joint.ny; ++y) px += joint.at(x, y);
        if (px <= 0.0) continue;
        double hx = 0.0;
        for (std::size_t y = 0; y < joint.ny; ++y)
            hx += neg_p_log2_p(joint.at(x, y) / px);
        h += px * hx;
    }
    return h;
}

double mutual_information(const JointPmf& joint) {
    check_pmf(joint.p, "mutual_information: joint must be nonnegative and sum to 1");
    const std::vector<double> px = joint.marginal_x();
    const std::vector<double> py = joint.marginal_y();
    double info = 0.0;
    for (std::size_t x = 0; x < joint.nx; ++x) {
        for (std::size_t y = 0; y < joint.ny; ++y) {
            const double pxy = joint.at(x, y);
            if (pxy > 0.0) info += pxy * std::log2(pxy / (px[x] * py[y]));
        }
    }
    return info;
}

}  // namespace twrc
