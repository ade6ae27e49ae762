#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fejerprime/arith.hpp"
#include "fejerprime/counting.hpp"
#include "fejerprime/smooth.hpp"

using namespace fejer;

TEST_CASE("prime residual and composite gap constants") {
    CHECK(b_alpha(18.5) == doctest::Approx(8.5330476257440651e-17).epsilon(1e-12));
    CHECK(composite_gap(1.0) == doctest::Approx(0.72932943352677462).epsilon(1e-14));
    CHECK(composite_gap(0.5 * std::log(2.0)) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
    CHECK_THROWS_AS(b_alpha(0.0), std::invalid_argument);
}

TEST_CASE("admissible threshold exponents") {
    CHECK(gamma_admissible_max(18.5, 50.0, 100.0) ==
          doctest::Approx(8.2391318537607248).epsilon(1e-12));
    CHECK(gamma_admissible_max(18.5, 50.0, 1.0) ==
          doctest::Approx(9.4103867913295638).epsilon(1e-12));
    // lambda equal to 1/B(alpha) pushes the cap to zero
    const double alpha = 2.0;
    CHECK(gamma_admissible_max(alpha, 50.0, std::exp(2.0 * alpha) + 1.0) ==
          doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("baseline counting sum") {
    SUBCASE("only primes contribute at the start") {
        const double v = pi_baseline(2.0, {0.001, 1e3});
        CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("first composite leaks C/(1+C)") {
        const double v = pi_baseline(4.0, {0.001, 1e3});
        CHECK(v == doctest::Approx(2.0 + 0.001 / 1.001).epsilon(1e-9));
    }
    SUBCASE("fixed threshold drifts visibly by x = 50") {
        const double drift = pi_baseline(50.0, {0.1, 1e3}) - 15.0;
        CHECK(drift > 0.5);
        CHECK(drift < 3.0);
    }
}

TEST_CASE("h-variant counting sum") {
    SUBCASE("figure parameters on the short range") {
        CHECK(std::abs(pi_h(50.0, {18.5, 5.0, 100.0, 50.0}) - 15.0) <= 1e-3);
    }
    SUBCASE("prime terms gate fully open when eps dominates the residual") {
        const double alpha = 18.5, gamma = 5.0;
        const double eps_p = std::pow(48.0, -gamma);
        const double lambda = eps_p / b_alpha(alpha);
        REQUIRE(lambda >= 1.0);
        // a_p >= lambda/(1+lambda)
        const double a_p = eps_p / (b_alpha(alpha) + eps_p);
        CHECK(a_p >= lambda / (1.0 + lambda) - 1e-12);
    }
    SUBCASE("monotone accumulation with terms in (0, 1]") {
        double prev = 0.0;
        for (double x = 2.0; x <= 40.0; x += 1.0) {
            const double v = pi_h(x, {18.5, 5.0, 100.0, 50.0});
            CHECK(v >= prev);
            CHECK(v - prev <= 1.0 + 1e-12);
            prev = v;
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(pi_h(50.0, {0.2, 5.0, 1.0, 50.0}), std::invalid_argument);
        CHECK_THROWS_AS(pi_h(50.0, {18.5, 0.5, 1.0, 50.0}), std::invalid_argument);
        CHECK_THROWS_AS(pi_h(1.0, {18.5, 5.0, 1.0, 50.0}), std::invalid_argument);
    }
}

TEST_CASE("error decomposition") {
    const HVariantParams params{18.5, 5.0, 100.0, 50.0};
    const auto ed = error_decomposition(50.0, params);
    SUBCASE("composite leakage stays below the summable bound") {
        CHECK(ed.composite_leakage > 0.0);
        CHECK(ed.composite_leakage <= ed.leakage_bound);
        // bound = sum_{n>=4}(n+1)^-5 / c_alpha; frozen partial sum
        CHECK(ed.leakage_bound ==
              doctest::Approx(5.8596630592136510e-4 / composite_gap(18.5)).epsilon(1e-10));
    }
    SUBCASE("triangle inequality against the true count") {
        const double err = std::abs(pi_h(50.0, params) -
                                    static_cast<double>(arith::prime_pi(50.0)));
        CHECK(err <= ed.composite_leakage + ed.prime_deficit + 1e-12);
    }
    SUBCASE("leakage does not accumulate between 1e2 and 1e4") {
        const HVariantParams wide{19.0, 7.0, 1.0, 10000.0};
        const auto e1 = error_decomposition(100.0, wide);
        const auto e2 = error_decomposition(10000.0, wide);
        double tail = 0.0;
        for (std::uint64_t n = 101; n <= 30000; ++n)
            tail += std::pow(static_cast<double>(n) + 1.0, -wide.gamma);
        tail /= composite_gap(wide.alpha);
        CHECK(e2.composite_leakage - e1.composite_leakage <= tail + 1e-15);
    }
}

TEST_CASE("gating terms survive extreme exponents") {
    // (n+1)^-gamma underflows past n ~ 1.4e6 at gamma = 50; the counting
    // sum must still gate primes fully open and composites fully closed.
    const double alpha = 18.5, gamma = 50.0;
    std::uint64_t p = 9999990;
    while (!arith::is_prime(p)) ++p;
    const std::uint64_t composite = p - 1;
    CHECK(std::pow(static_cast<double>(p) + 1.0, -gamma) == 0.0);

    const double g_prime = std::abs(p_tau_integer(p, alpha * (static_cast<double>(p) + 1.0)));
    CHECK(g_prime == 0.0);  // residual below half an ulp of 1

    const double g_comp = std::abs(
        p_tau_integer(composite, alpha * (static_cast<double>(composite) + 1.0)));
    CHECK(g_comp >= composite_gap(alpha));

    // with those pieces the gating terms collapse to the indicators:
    // eps/(g+eps) = 1 exactly for the prime (g = 0) and 0 for the
    // composite (eps = 0 against g >= c_alpha)
    CHECK(0.0 / (g_comp + 0.0) == 0.0);
}
