#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fejerprime/arith.hpp"
#include "fejerprime/indicator.hpp"

using namespace fejer;

TEST_CASE("cutoff index has the exact-square correction") {
    CHECK(indicator_cutoff_index(2.0) == 2);
    CHECK(indicator_cutoff_index(4.0) == 2);
    CHECK(indicator_cutoff_index(9.0) == 3);
    CHECK(indicator_cutoff_index(9.000001) == 4);
    CHECK(indicator_cutoff_index(8.999999) == 3);
    CHECK(indicator_cutoff_index(1e14) == 10000000);
}

TEST_CASE("point values of the indicator") {
    CHECK(indicator_P(2.0).value == doctest::Approx(2.0));
    CHECK(std::abs(indicator_P(13.0).value) <= 1e-8);
    CHECK(indicator_P(12.0).value == doctest::Approx(29.0 / 12.0).epsilon(1e-10));
    CHECK(indicator_P(1.0).value == 0.0);
    CHECK(indicator_P(0.5).value == 0.0);
    CHECK(indicator_P(50.0).n_terms == 7);  // indices 2..8
}

TEST_CASE("integer evaluation through the divisor oracle") {
    CHECK(indicator_P_integer(4) == doctest::Approx(1.0));
    CHECK(indicator_P_integer(8) == doctest::Approx(0.5));
    CHECK(indicator_P_integer(17) == 0.0);
    CHECK(indicator_P_integer(12) == doctest::Approx(29.0 / 12.0));
    CHECK_THROWS_AS(indicator_P_integer(1), std::invalid_argument);
}

TEST_CASE("exact zero law against the oracle") {
    const auto table = arith::prime_table(20000);
    for (std::uint64_t n = 2; n <= 20000; ++n) {
        const bool zero = is_odd_prime_via_indicator(n);
        const bool expected = table[n] && n % 2 == 1;
        if (zero != expected) REQUIRE(zero == expected);
    }
    CHECK_FALSE(is_odd_prime_via_indicator(2));
    CHECK_FALSE(is_odd_prime_via_indicator(9));
    CHECK(is_odd_prime_via_indicator(31));
}

TEST_CASE("numerical and exact integer paths agree") {
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        const double exact = indicator_P_integer(n);
        const double numeric = indicator_P(static_cast<double>(n)).value;
        if (std::abs(numeric - exact) > 1e-8 * (1.0 + exact)) {
            CAPTURE(n);
            REQUIRE(std::abs(numeric - exact) <= 1e-8 * (1.0 + exact));
        }
    }
    CHECK(true);
}

TEST_CASE("positive off the integers") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> xd(1.0, 10000.0);
    int checked = 0;
    while (checked < 100000) {
        const double x = xd(rng);
        if (std::abs(x - std::floor(x + 0.5)) <= 1e-6) continue;
        ++checked;
        if (!(indicator_P(x).value > 0.0)) {
            CAPTURE(x);
            REQUIRE(indicator_P(x).value > 0.0);
        }
    }
    CHECK(true);
}

TEST_CASE("composite bounds") {
    SUBCASE("2p composites sit exactly on the floor") {
        CHECK(indicator_P_integer(10) == doctest::Approx(0.4));
        CHECK(composite_bounds(10).lower == doctest::Approx(0.4));
    }
    SUBCASE("power of two above the floor") {
        CHECK(indicator_P_integer(16) == doctest::Approx(1.25));
        CHECK(indicator_P_integer(16) > composite_bounds(16).lower);
    }
    SUBCASE("equality at n = 4") {
        CHECK(indicator_P_integer(4) == doctest::Approx(composite_bounds(4).lower));
    }
    SUBCASE("primes are rejected") {
        CHECK_THROWS_AS(composite_bounds(13), std::invalid_argument);
        CHECK_THROWS_AS(composite_bounds(2), std::invalid_argument);
    }
    SUBCASE("envelope holds with exact equality set up to 2e4") {
        const auto table = arith::prime_table(20000);
        for (std::uint64_t n = 4; n <= 20000; ++n) {
            if (table[n]) continue;
            const auto b = composite_bounds(n);
            const double p = indicator_P_integer(n);
            if (!(b.lower <= p && p <= b.upper)) {
                CAPTURE(n);
                REQUIRE(b.lower <= p);
                REQUIRE(p <= b.upper);
            }
            // Equality iff 2 is the only divisor in [2, ceil(sqrt n)]: that
            // is {4, 8} and 2p for odd primes p >= 5. For n = 6 the ceiling
            // reaches the cofactor 3, so 6 sits strictly above the floor.
            const bool equality = indicator_divisor_sum(n) == 4;
            const bool expected = n == 4 || n == 8 ||
                                  (n % 2 == 0 && n / 2 >= 5 && (n / 2) % 2 == 1 &&
                                   table[n / 2]);
            if (equality != expected) REQUIRE(equality == expected);
        }
        CHECK(true);
    }
}

TEST_CASE("predicted jump sizes") {
    CHECK(jump_predicted(1) == doctest::Approx(19.739208802178717).epsilon(1e-14));
    CHECK(jump_predicted(2) == doctest::Approx(6.5797362673929057).epsilon(1e-14));
    CHECK(jump_predicted(100) == doctest::Approx(2.0408581009659577).epsilon(1e-12));
    // strictly decreasing toward 2
    double prev = jump_predicted(1);
    for (std::uint64_t m = 2; m <= 200; ++m) {
        const double cur = jump_predicted(m);
        REQUIRE(cur < prev);
        REQUIRE(cur > 2.0);
        prev = cur;
    }
}

TEST_CASE("measured jumps match the prediction") {
    for (const std::uint64_t m : {1ull, 2ull, 3ull}) {
        const auto r = jump_measured(m, 1e-4);
        CHECK(std::abs(r.measured - r.predicted) / r.predicted <= 0.01);
    }
    CHECK_THROWS_AS(jump_measured(3, 1e-7), std::invalid_argument);
    CHECK_THROWS_AS(jump_measured(0, 1e-4), std::invalid_argument);
}

TEST_CASE("local quadratic coefficient near odd primes") {
    CHECK(local_quadratic_coefficient(3) == doctest::Approx(3.2898681336964529).epsilon(1e-13));
    CHECK_THROWS_AS(local_quadratic_coefficient(2), std::invalid_argument);
    CHECK_THROWS_AS(local_quadratic_coefficient(9), std::invalid_argument);
    // floor pi^2/p for a spread of odd primes
    for (const std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 97ull, 997ull}) {
        CHECK(local_quadratic_coefficient(p) >= kPi * kPi / static_cast<double>(p));
    }
}

TEST_CASE("quadratic fit of the indicator recovers the coefficient") {
    for (const std::uint64_t p : {3ull, 13ull}) {
        const double exact = local_quadratic_coefficient(p);
        const double half = 1e-3;
        double s4 = 0.0, sy2 = 0.0;
        for (int j = -4; j <= 4; ++j) {
            if (j == 0) continue;
            const double t = half * j / 4.0;
            const double y = indicator_P(static_cast<double>(p) + t).value;
            s4 += t * t * t * t;
            sy2 += y * t * t;
        }
        const double fitted = sy2 / s4;
        CHECK(std::abs(fitted - exact) / exact <= 0.005);
    }
}

TEST_CASE("one-sided slopes agree at the junctions") {
    const double h = 5e-7;
    for (std::uint64_t m = 1; m <= 30; ++m) {
        const double x0 = static_cast<double>(m) * static_cast<double>(m);
        const double p0 = indicator_P(x0).value;
        const double right = (indicator_P(x0 + h).value - p0) / h;
        const double left = (p0 - indicator_P(x0 - h).value) / h;
        if (std::abs(right - left) > 1e-4) {
            CAPTURE(m);
            REQUIRE(std::abs(right - left) <= 1e-4);
        }
    }
    CHECK(true);
}

TEST_CASE("certified aggregate evaluation") {
    const auto cv = indicator_P_certified(12.3, 8);
    const double reference = indicator_P(12.3, {EvalKind::cosine_poly}).value;
    CHECK(std::abs(cv.value - reference) <= cv.abs_error_bound);
    CHECK(cv.abs_error_bound > 0.0);
}
