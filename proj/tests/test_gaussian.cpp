#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "twrc/gaussian.hpp"

using namespace twrc;

TEST_CASE("two-sided tail endpoints") {
    CHECK(gaussian_two_sided_tail(0.0) == 1.0);
    // Frozen reference values from the quadrature / asymptotic oracles.
    CHECK(gaussian_two_sided_tail(1.0) ==
          doctest::Approx(0.31731050786291410).epsilon(1e-13));
    CHECK(gaussian_two_sided_tail(8.0) ==
          doctest::Approx(1.2441921148543568e-15).epsilon(1e-12));
    CHECK_THROWS_AS(gaussian_two_sided_tail(-1e-9), std::domain_error);
    CHECK_THROWS_AS(gaussian_two_sided_tail(std::nan("")), std::domain_error);
}

TEST_CASE("two-sided tail matches quadrature to 1e-12 relative on [0, 8]") {
    for (double a = 0.0; a <= 8.0; a += 0.0625) {
        const double got = gaussian_two_sided_tail(a);
        const double want = oracles::two_sided_tail_quadrature(a);
        CHECK(std::abs(got - want) <= 1e-12 * want);
    }
}

TEST_CASE("two-sided tail matches the asymptotic expansion deep in the tail") {
    // The divergent series only reaches 1e-12 once a is large enough; its
    // optimal-truncation floor is ~1.1e-8 at a = 6.
    for (double a : {7.5, 7.75, 8.0}) {
        const double got = gaussian_two_sided_tail(a);
        const double want = oracles::two_sided_tail_asymptotic(a);
        CHECK(std::abs(got - want) <= 1e-12 * want);
    }
    CHECK(std::abs(gaussian_two_sided_tail(6.0) -
                   oracles::two_sided_tail_asymptotic(6.0)) <=
          2e-8 * gaussian_two_sided_tail(6.0));
}

TEST_CASE("two-sided tail is strictly decreasing") {
    double prev = gaussian_two_sided_tail(0.0);
    for (double a = 0.25; a <= 8.0; a += 0.25) {
        const double cur = gaussian_two_sided_tail(a);
        CHECK(cur < prev);
        prev = cur;
    }
}
