#pragma once

#include <cstdint>
#include <utility>

// Single Fejer divisor-filter term
//
//   F(x,i) = i + 2 * sum_{k=1}^{i-1} (i-k) cos(2 pi k x / i)
//          = (sin(pi x) / sin(pi x / i))^2        away from x in i*Z,
//
// in three numerical representations:
//
//   * exact cosine polynomial, O(i) per evaluation,
//   * guarded sine quotient, O(1), with a local Taylor surrogate and an
//     exact-divisor branch near the removable singularities,
//   * truncated resonant partial fractions (RPF) with a certified
//     absolute error bound.
//
// F(n,i) = i^2 when i | n and 0 otherwise, and F >= 0 everywhere; callers
// build prime indicators out of these facts.

namespace fejer {

inline constexpr double kPi = 3.14159265358979323846;

// round(u) = floor(u + 1/2), ties toward +infinity.
std::int64_t round_half_up(double u);

// sin(pi x) through the exact reduction x = m + f, |f| <= 1/2. The naive
// std::sin(pi * x) loses x * ulp(pi) of phase, which is fatal whenever the
// sine is small against x.
double sin_pi(double x);

// Offset of x from its nearest multiple of i: x = i*m + t with |t| <= i/2.
struct NearestLattice {
    std::int64_t m;
    double t;
};

NearestLattice nearest_lattice(double x, std::int64_t i);

// Thresholds controlling when the sine-quotient path is abandoned for the
// Taylor surrogate / cosine polynomial near x/i ~ integer.
struct ResonanceGuard {
    double eps_int = 1e-12;  // |x - round(x)| below this counts as integer
    double eps_res = 1e-6;   // denominator-resonance tolerance

    // Half-width of the region around each lattice point where the local
    // even expansion is accurate to fourth order.
    static double taylor_window(std::int64_t i);

    void validate() const;  // throws std::invalid_argument if out of range
};

// Value plus a rigorous bound on its absolute error.
struct CertifiedValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

enum class EvalKind {
    cosine_poly,    // exact trigonometric polynomial, O(i)
    sine_quotient,  // guarded quotient of sines, O(1)
    rpf,            // truncated resonant partial fractions, O(K)
    automatic,      // alias for the guarded sine quotient
};

struct EvalStrategy {
    EvalKind kind = EvalKind::automatic;
    int rpf_terms = 2;  // K: poles kept on each side of the nearest one
};

// F(x,i) as the exact cosine polynomial. Exact i^2 / 0 at integers when
// i divides / does not divide x.
double fejer_cosine_poly(double x, std::int64_t i);

// Local even expansion i^2 (1 - 2 alpha_i (pi t)^2), alpha_i = (1-1/i^2)/6,
// clamped at zero. Throws std::domain_error when |t| exceeds
// ResonanceGuard::taylor_window(i); the caller must fall back to the
// cosine polynomial there.
double fejer_taylor_surrogate(double x, std::int64_t i);

// Guarded quotient of sines; total over all real x > 0 by branching into
// the exact-divisor value, the Taylor surrogate, or the cosine polynomial
// when a resonance is flagged. Always >= 0.
double fejer_sine_quotient(double x, std::int64_t i, const ResonanceGuard& guard = {});

// Symmetric (2K+1)-pole truncation of the partial-fraction form, with
//   abs_error_bound = (sin^2(pi x) / pi^2) * 2 / (K + 1/2).
// Arguments within guard.eps_int of a multiple of i short-circuit to the
// exact value i^2 with a zero bound.
CertifiedValue fejer_rpf(double x, std::int64_t i, int pole_pairs,
                         const ResonanceGuard& guard = {});

// Rigorous enclosure of the pole sum Sigma(x,i) = sum_k (x - i k)^{-2}:
//   1/t^2 <= Sigma(x,i) <= 1/t^2 + pi^2/i^2.
// Throws std::domain_error when t = 0 (removable singularity; the term
// value there is exactly i^2).
std::pair<double, double> pole_sum_bounds(double x, std::int64_t i);

// Dispatcher over the representations above.
double fejer(double x, std::int64_t i, EvalStrategy strategy = {},
             const ResonanceGuard& guard = {});

namespace detail {

// Quotient-of-sines branch with the numerator sin^2(pi x) hoisted out, so
// that sums over i reuse it.  Same branch structure as fejer_sine_quotient.
double quotient_term(double x, std::int64_t i, const ResonanceGuard& guard,
                     double sin2_pi_x);

// RPF value/bound with precomputed numerator and lattice data.
CertifiedValue rpf_term(std::int64_t i, int pole_pairs, double sin2_pi_x,
                        double t);

}  // namespace detail

}  // namespace fejer
