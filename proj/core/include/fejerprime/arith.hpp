#pragma once

#include <cstdint>
#include <vector>

// Brute-force integer arithmetic used as ground truth by the analytic code
// and by the test suites. Everything here is integer-only trial division and
// sieving; none of it touches floating point.

namespace fejer::arith {

// floor(sqrt(n)) in pure integer arithmetic.
std::uint64_t isqrt(std::uint64_t n);

// ceil(sqrt(n)); equals isqrt(n) exactly at perfect squares.
std::uint64_t sqrt_ceil(std::uint64_t n);

// All divisors of n in ascending order, including 1 and n. Requires n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Divisor count tau(n) and divisor sum sigma(n). Require n >= 1.
std::uint64_t tau(std::uint64_t n);
std::uint64_t sigma(std::uint64_t n);

// Trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

// Number of primes <= floor(x); 0 for x < 2. Sieves for arguments up to
// 1e7 and falls back to per-number trial division above that.
std::uint64_t prime_pi(double x);

// Primality table for 0..limit (inclusive), sieve of Eratosthenes.
std::vector<std::uint8_t> prime_table(std::uint64_t limit);

}  // namespace fejer::arith
