#pragma once

#include <cstdint>

#include "fejerprime/fejer_term.hpp"

// Sharp-cutoff prime indicator
//
//   P(x) = (1/x) * sum_{i=2}^{ceil(sqrt(x))} F(x,i)   for x > 1,  P(x) = 0 else.
//
// At integers n >= 2 this equals (1/n) * sum of d^2 over divisors d of n
// with 2 <= d <= ceil(sqrt(n)); it vanishes exactly at the odd primes, is
// strictly positive elsewhere on (1, inf), is C^1, and its second
// derivative jumps at the squares m^2 by 2 pi^2 / (m^2 sin^2(pi/(m+1))).

namespace fejer {

struct IndicatorValue {
    double x = 0.0;
    double value = 0.0;
    int n_terms = 0;  // ceil(sqrt(x)) - 1
};

// Upper summation index ceil(sqrt(x)), with an integer-exactness correction
// so that perfect squares are never pushed up by floating-point sqrt.
std::int64_t indicator_cutoff_index(double x);

IndicatorValue indicator_P(double x, EvalStrategy strategy = {},
                           const ResonanceGuard& guard = {});

// P(x) evaluated through the RPF representation, with the per-term
// certified bounds aggregated into one absolute bound on P.
CertifiedValue indicator_P_certified(double x, int pole_pairs,
                                     const ResonanceGuard& guard = {});

// Exact integer divisor sum S(n) = sum d^2 over d | n, 2 <= d <= ceil(sqrt n).
std::uint64_t indicator_divisor_sum(std::uint64_t n);

// P(n) = S(n)/n through the divisor oracle; the ground-truth path.
// Requires n >= 2.
double indicator_P_integer(std::uint64_t n);

// true iff P(n) = 0 exactly, i.e. iff n is an odd prime. Requires n >= 2.
bool is_odd_prime_via_indicator(std::uint64_t n);

// Lower/upper envelope for composite n: 4/n <= P(n) <= (1/n) sum_{d<=N(n)} d^2.
// Lower equality holds exactly when 2 is the only divisor in range, i.e. on
// {4, 8} and {2p : p odd prime}. Throws std::invalid_argument for primes.
struct CompositeBounds {
    double lower = 0.0;
    double upper = 0.0;
};

CompositeBounds composite_bounds(std::uint64_t n);

// Predicted second-derivative jump at x = m^2:
//   2 pi^2 / (m^2 sin^2(pi/(m+1))),  equal to 2 pi^2 at m = 1,
// strictly decreasing toward 2 like 2 + 4/m.
double jump_predicted(std::uint64_t m);

struct JumpReport {
    std::uint64_t m = 0;
    double predicted = 0.0;
    double measured = 0.0;
    double h = 0.0;
};

// Measured jump: central 5-point second-difference stencils evaluated at
// m^2 +- 10h, one fully on each side of the junction.
JumpReport jump_measured(std::uint64_t m, double h, EvalStrategy strategy = {},
                         const ResonanceGuard& guard = {});

// Quadratic coefficient C_p of P near an odd prime p:
//   P(p + t) = C_p t^2 + O(t^3),  C_p = (pi^2/p) sum_{i=2}^{N(p)} 1/sin^2(pi p/i),
// with C_p >= pi^2/p. Throws unless p is an odd prime.
double local_quadratic_coefficient(std::uint64_t p);

}  // namespace fejer
