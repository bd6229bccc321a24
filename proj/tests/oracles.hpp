// Test-only reference implementations, kept independent of the library code
// paths they check.
#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace oracles {

inline double gauss_density(double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(8.0 * std::atan(1.0));
}

namespace detail {

template <typename F>
double simpson(const F& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double whole, double eps,
                        int depth) {
    const double m = 0.5 * (a + b);
    const double left = simpson(f, a, m);
    const double right = simpson(f, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, right, eps / 2.0, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double rel_tol) {
    double coarse = 0.0;
    const double h = (b - a) / 64.0;
    for (int i = 0; i < 64; ++i) coarse += simpson(f, a + i * h, a + (i + 1) * h);
    return adaptive_simpson(f, a, b, simpson(f, a, b), std::abs(coarse) * rel_tol, 40);
}

}  // namespace detail

// Pr(|n| >= a) by adaptive quadrature. Substituting t = a + u factors the
// integral as 2 phi(a) * int_0^12 exp(-a u - u^2/2) du, which keeps the
// integrand O(1) at every a; the remainder beyond u = 12 is below e^-72
// relative to the whole.
inline double two_sided_tail_quadrature(double a) {
    const auto g = [a](double u) { return std::exp(-u * (a + 0.5 * u)); };
    return 2.0 * gauss_density(a) * detail::integrate(g, 0.0, 12.0, 1e-15);
}

// Pr(|n| >= a) from the alternating asymptotic expansion of the one-sided
// tail, truncated at the smallest term. The optimal-truncation floor is
// ~1e-8 relative at a = 6 and ~9e-15 at a = 8, so treat this as a
// 1e-12-grade reference only for a >= 7.5.
inline double two_sided_tail_asymptotic(double a) {
    const double inv_a2 = 1.0 / (a * a);
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 64; ++k) {
        term *= -(2.0 * k - 1.0) * inv_a2;
        if (std::abs(term) >= prev) break;  // past the optimal truncation
        sum += term;
        prev = std::abs(term);
    }
    return 2.0 * gauss_density(a) / a * sum;
}

// Entropy in bits of a list of (outcome, probability) atoms, merging
// duplicate outcomes first. Independent of the library's pmf plumbing.
template <typename Key>
double atom_entropy(const std::vector<std::pair<Key, double>>& atoms) {
    std::map<Key, double> merged;
    for (const auto& [key, p] : atoms) merged[key] += p;
    double h = 0.0;
    for (const auto& [key, p] : merged)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

}  // namespace oracles
