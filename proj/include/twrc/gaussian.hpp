#pragma once

namespace twrc {

// Pr(|n| >= a) for zero-mean unit-variance Gaussian noise, a >= 0.
// Relative accuracy better than 1e-12 over a in [0, 8].
double gaussian_two_sided_tail(double a);

}  // namespace twrc
