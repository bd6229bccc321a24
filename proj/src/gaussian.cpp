#include "twrc/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace twrc {

double gaussian_two_sided_tail(double a) {
    if (!std::isfinite(a) || a < 0.0)
        throw std::domain_error("gaussian_two_sided_tail: a must be finite and >= 0");
    // Pr(|n| >= a) = erfc(a / sqrt(2)); erfc keeps full relative precision
    // deep into the tail where 1 - erf(a) would cancel.
    return std::erfc(a / std::sqrt(2.0));
}

}  // namespace twrc
