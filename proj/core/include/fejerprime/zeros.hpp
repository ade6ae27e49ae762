#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

// Companion-zero location for the smooth indicators.
//
// Near each odd prime p, P_tau(.; kappa) develops a pair of simple zeros
// flanking p whose distance shrinks like e^{-kappa/(p+1)}, and
// P_sigma(.; kappa) an asymmetric pair: a left zero exponentially close to
// p (within [Delta/2, 2*Delta] of it, Delta = sigma_residual(p, kappa)) and
// a right zero at an essentially kappa-independent distance. The scans
// here bracket sign changes on grids adapted to those scales and refine by
// bisection; sides without a detectable sign change are reported absent
// rather than fabricated.

namespace fejer {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// All consecutive sample pairs [a + k*step, a + (k+1)*step] across which
// the sign of f flips. A sample with f = 0 pairs as nonpositive, so an
// exact grid hit produces exactly one bracket.
std::vector<Bracket> find_sign_changes(const std::function<double(double)>& f,
                                       double a, double b, double step);

// Plain bisection; the bracket must carry a sign change (f = 0 endpoints
// count). Locates the root to within tol in x, or to the last representable
// interval if that is wider. Throws std::invalid_argument otherwise.
double bisect(const std::function<double(double)>& f, Bracket bracket,
              double tol = 1e-13);

struct ZeroPair {
    std::uint64_t p = 0;
    double kappa = 0.0;
    std::optional<double> left;   // nearest zero below p, if found
    std::optional<double> right;  // nearest zero above p, if found

    double left_gap() const;   // p - left  (throws if absent)
    double right_gap() const;  // right - p (throws if absent)
};

// Nearest sign-change zeros of P_tau(.; kappa) on each side of the odd
// prime p, searched over (p - 1/2, p + 1/2). Below kappa ~ 10 a side can
// be genuinely missing; what is found is reported as-is.
ZeroPair companion_zeros_tau(std::uint64_t p, double kappa);

// Asymmetric pair for P_sigma: left zero searched on (p - 4 Delta, p),
// right zero on (p, p + 1).
ZeroPair companion_zeros_sigma(std::uint64_t p, double kappa);

struct DecayFit {
    double slope = 0.0;      // d log(gap) / d kappa
    double intercept = 0.0;
    double rms_residual = 0.0;
};

// Least squares of log(gap) against kappa over >= 3 points with positive
// gaps; throws std::invalid_argument otherwise.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& kappa_gap);

}  // namespace fejer
