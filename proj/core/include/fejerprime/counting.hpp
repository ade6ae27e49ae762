#pragma once

#include <cstdint>

// Illustrative prime-counting sums driven by the smooth divisor-count
// analogue at integer arguments.
//
// Baseline (fixed threshold C, fixed steepness kappa):
//   pi_baseline(x) = sum_{n=2}^{floor x} (1 - g(n)/(g(n)+C)),
//   g(n) = |p_tau_integer(n; kappa)|.
// Composites each leak up to C/(1+C), so the error drifts linearly in x.
//
// H-variant (input-dependent steepness and threshold):
//   kappa(n) = alpha (n+1),  eps(n) = (n+1)^{-gamma},
//   pi_h(x) = sum a_n,  a_n = eps(n) / (g(n) + eps(n)).
// Composite leakage is then summable (bounded by zeta(gamma)/c_alpha with
// c_alpha = 1 - 2 e^{-2 alpha}), while the prime deficit is governed by
// the residual B(alpha) = 1/(e^{2 alpha} + 1).

namespace fejer {

struct BaselineParams {
    double threshold = 1e-3;  // C
    double kappa = 1e3;
};

struct HVariantParams {
    double alpha = 18.5;   // steepness rate, needs alpha > log(2)/2
    double gamma = 5.0;    // threshold exponent, needs gamma > 1
    double lambda = 1.0;   // admissibility safety factor
    double range = 50.0;   // intended x range X
};

double pi_baseline(double x, const BaselineParams& params);

// Odd-prime residual B(alpha) = 1/(e^{2 alpha}+1).
double b_alpha(double alpha);

// Uniform composite gap c_alpha = 1 - 2 e^{-2 alpha}; positive once
// alpha > log(2)/2.
double composite_gap(double alpha);

// Largest admissible gamma on range X at safety lambda:
//   (log(e^{2 alpha}+1) - log lambda) / log(X+1).
// A negative result signals that alpha is too small for the range.
double gamma_admissible_max(double alpha, double range, double lambda);

double pi_h(double x, const HVariantParams& params);

struct ErrorDecomposition {
    double composite_leakage = 0.0;  // E_c: sum of a_n over composites <= x
    double prime_deficit = 0.0;      // E_p: sum of B/(B+eps(p)) over primes <= x
    double leakage_bound = 0.0;      // zeta-style bound sum_{n>=4}(n+1)^{-gamma}/c_alpha
};

ErrorDecomposition error_decomposition(double x, const HVariantParams& params);

}  // namespace fejer
