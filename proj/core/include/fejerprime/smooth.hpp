#pragma once

#include <cstdint>

#include "fejerprime/fejer_term.hpp"

// Smooth divisor-counting and divisor-sum analogues
//
//   P_tau(x; kappa)   = sum_{i>=2} phi_kappa(i/(x+1)) F(x,i)/i^2 - 1,
//   P_sigma(x; kappa) = sum_{i>=2} phi_kappa(i/(x+1)) F(x,i)/i   - x.
//
// Both series are truncated at a cut index M chosen so that the certified
// geometric tail stays below a requested budget eps. At integers the core
// sums collapse to divisor sums, and in the steep-cutoff limit
//   P_tau(n) -> tau(n) - 2,   P_sigma(n) -> sigma(n) - n - 1,
// which vanish exactly at primes.

namespace fejer {

struct TruncationPlan {
    enum class Kind { tau, sigma };

    Kind kind = Kind::tau;
    std::int64_t cut = 0;      // series cut index M (all i <= M are summed)
    double tail_bound = 0.0;   // certified bound on the dropped tail
    double eps = 0.0;          // requested budget (tail_bound <= eps)
    double kappa = 0.0;
    double a = 0.0, b = 0.0;   // interval the plan is valid on
};

// Certified cut index for x in [a, b]. With c = 2 kappa/(b+1), r = e^{-c},
// the cutoff obeys phi_kappa(i/(x+1)) <= r^{i-(b+1)} for i > b+1, so
//   tau   : M = max(ceil(b+1), ceil(b + log(1/((1-r) eps)) / c)),
//           tail <= r^{M-b}/(1-r);
//   sigma : minimal M >= b+1 with (M+2) r^{M-b}/(1-r)^2 <= eps.
// Throws std::runtime_error when the cut would exceed 10^6 (kappa too
// small for the requested budget).
TruncationPlan plan_truncation(TruncationPlan::Kind kind, double a, double b,
                               double kappa, double eps);

struct SmoothValue {
    double x = 0.0;
    double kappa = 0.0;
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t cut_used = 0;
};

SmoothValue p_tau(double x, double kappa, double eps = 1e-12,
                  const ResonanceGuard& guard = {});
SmoothValue p_sigma(double x, double kappa, double eps = 1e-12,
                    const ResonanceGuard& guard = {});

// Exact finite divisor sums at integer arguments (ground-truth path):
//   p_tau_integer(n)   = sum_{d|n, d>=2} phi_kappa(d/(n+1)) - 1,
//   p_sigma_integer(n) = sum_{d|n, d>=2} d phi_kappa(d/(n+1)) - n.
double p_tau_integer(std::uint64_t n, double kappa);
double p_sigma_integer(std::uint64_t n, double kappa);

// Steep-cutoff limit of the local quadratic coefficient of P_tau at an odd
// prime p; strictly positive, equal to 7 pi^2/432 at p = 3.
double b_infinity_tau(std::uint64_t p);

// Prime residual scale of P_sigma: Delta_p(kappa) = p (1 - phi_kappa(p/(p+1))).
// Satisfies p_sigma_integer(p, kappa) = -Delta_p(kappa).
double sigma_residual(std::uint64_t p, double kappa);

}  // namespace fejer
