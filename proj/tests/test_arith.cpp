#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "fejerprime/arith.hpp"

using namespace fejer::arith;

TEST_CASE("divisor lists") {
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(13) == std::vector<std::uint64_t>{1, 13});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("tau and sigma") {
    CHECK(tau(12) == 6);
    CHECK(tau(2) == 2);
    CHECK(sigma(6) == 12);
    CHECK(sigma(1) == 1);
}

TEST_CASE("primality and prime counting") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(prime_pi(50) == 15);
    CHECK(prime_pi(1.5) == 0);
    CHECK(prime_pi(2.0) == 1);
    CHECK(prime_pi(10000) == 1229);
}

TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt(17) == 4);
    CHECK(sqrt_ceil(16) == 4);
    CHECK(sqrt_ceil(17) == 5);
    CHECK(sqrt_ceil(8) == 3);
}

TEST_CASE("divisor sums agree with tau and sigma up to 1e5") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const auto divs = divisors(n);
        std::uint64_t sum = 0;
        for (const auto d : divs) sum += d;
        if (divs.size() != tau(n) || sum != sigma(n)) {
            REQUIRE(divs.size() == tau(n));
            REQUIRE(sum == sigma(n));
        }
    }
    CHECK(true);
}

TEST_CASE("primality is tau(n) == 2 up to 1e5") {
    const auto table = prime_table(100000);
    for (std::uint64_t n = 2; n <= 100000; ++n) {
        const bool via_tau = tau(n) == 2;
        if (via_tau != static_cast<bool>(table[n]) || via_tau != is_prime(n)) {
            REQUIRE(via_tau == static_cast<bool>(table[n]));
            REQUIRE(via_tau == is_prime(n));
        }
    }
    CHECK(true);
}
