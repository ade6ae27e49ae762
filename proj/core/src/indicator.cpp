#include "fejerprime/indicator.hpp"

#include <cmath>
#include <stdexcept>

#include "fejerprime/arith.hpp"

namespace fejer {

namespace {

inline void kahan_add(double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

}  // namespace

std::int64_t indicator_cutoff_index(double x) {
    if (x <= 1.0) return 1;  // empty index range
    const double s = std::sqrt(x);
    const std::int64_t r = static_cast<std::int64_t>(std::llround(s));
    // At perfect squares the ceiling must be the exact root, not a
    // float-sqrt neighbour.
    if (static_cast<double>(r) * static_cast<double>(r) == x) return r;
    return static_cast<std::int64_t>(std::ceil(s));
}

IndicatorValue indicator_P(double x, EvalStrategy strategy,
                           const ResonanceGuard& guard) {
    if (x <= 1.0) return {x, 0.0, 0};
    const std::int64_t cutoff = indicator_cutoff_index(x);
    double sum = 0.0, comp = 0.0;
    switch (strategy.kind) {
        case EvalKind::cosine_poly: {
            for (std::int64_t i = 2; i <= cutoff; ++i)
                kahan_add(sum, comp, fejer_cosine_poly(x, i));
            break;
        }
        case EvalKind::rpf: {
            const double sx = sin_pi(x);
            const double sin2 = sx * sx;
            for (std::int64_t i = 2; i <= cutoff; ++i) {
                const auto [m, t] = nearest_lattice(x, i);
                if (std::abs(t) < guard.eps_int) {
                    kahan_add(sum, comp, static_cast<double>(i) * static_cast<double>(i));
                } else {
                    kahan_add(sum, comp, detail::rpf_term(i, strategy.rpf_terms, sin2, t).value);
                }
            }
            break;
        }
        case EvalKind::sine_quotient:
        case EvalKind::automatic: {
            const double sx = sin_pi(x);
            const double sin2 = sx * sx;
            for (std::int64_t i = 2; i <= cutoff; ++i)
                kahan_add(sum, comp, detail::quotient_term(x, i, guard, sin2));
            break;
        }
    }
    return {x, (sum + comp) / x, static_cast<int>(cutoff - 1)};
}

CertifiedValue indicator_P_certified(double x, int pole_pairs,
                                     const ResonanceGuard& guard) {
    if (x <= 1.0) return {0.0, 0.0};
    const std::int64_t cutoff = indicator_cutoff_index(x);
    const double sx = sin_pi(x);
    const double sin2 = sx * sx;
    double sum = 0.0, comp = 0.0, bound = 0.0;
    for (std::int64_t i = 2; i <= cutoff; ++i) {
        const auto [m, t] = nearest_lattice(x, i);
        if (std::abs(t) < guard.eps_int) {
            kahan_add(sum, comp, static_cast<double>(i) * static_cast<double>(i));
        } else {
            const auto cv = detail::rpf_term(i, pole_pairs, sin2, t);
            kahan_add(sum, comp, cv.value);
            bound += cv.abs_error_bound;
        }
    }
    return {(sum + comp) / x, bound / x};
}

std::uint64_t indicator_divisor_sum(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("indicator_divisor_sum: n must be >= 2");
    const std::uint64_t cutoff = arith::sqrt_ceil(n);
    std::uint64_t sum = 0;
    for (std::uint64_t d = 2; d <= cutoff; ++d) {
        if (n % d == 0) sum += d * d;
    }
    return sum;
}

double indicator_P_integer(std::uint64_t n) {
    return static_cast<double>(indicator_divisor_sum(n)) / static_cast<double>(n);
}

bool is_odd_prime_via_indicator(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("is_odd_prime_via_indicator: n must be >= 2");
    return indicator_divisor_sum(n) == 0;
}

CompositeBounds composite_bounds(std::uint64_t n) {
    if (n < 4 || arith::is_prime(n))
        throw std::invalid_argument("composite_bounds: n must be composite and >= 4");
    const std::uint64_t cutoff = arith::sqrt_ceil(n);
    // sum_{d=1}^{N} d^2 = N(N+1)(2N+1)/6 dominates the divisor sum.
    const std::uint64_t full = cutoff * (cutoff + 1) * (2 * cutoff + 1) / 6;
    CompositeBounds out;
    out.lower = 4.0 / static_cast<double>(n);
    out.upper = static_cast<double>(full) / static_cast<double>(n);
    return out;
}

double jump_predicted(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("jump_predicted: m must be >= 1");
    const double md = static_cast<double>(m);
    const double s = std::sin(kPi / (md + 1.0));
    return 2.0 * kPi * kPi / (md * md * s * s);
}

JumpReport jump_measured(std::uint64_t m, double h, EvalStrategy strategy,
                         const ResonanceGuard& guard) {
    if (m < 1) throw std::invalid_argument("jump_measured: m must be >= 1");
    if (!(1e-6 <= h && h <= 1e-2))
        throw std::invalid_argument("jump_measured: h must lie in [1e-6, 1e-2]");
    const double x0 = static_cast<double>(m) * static_cast<double>(m);
    const double delta = 10.0 * h;
    const auto p = [&](double x) { return indicator_P(x, strategy, guard).value; };
    const auto second = [&](double c) {
        return (-p(c - 2.0 * h) + 16.0 * p(c - h) - 30.0 * p(c) + 16.0 * p(c + h) -
                p(c + 2.0 * h)) /
               (12.0 * h * h);
    };
    // One-sided limits of P'' at the junction: the stencil value at the
    // offset delta carries an O(delta P''') term, so extrapolate linearly
    // in the offset from delta and 2*delta back to the wall.
    const auto side_limit = [&](double sign) {
        return 2.0 * second(x0 + sign * delta) - second(x0 + sign * 2.0 * delta);
    };
    JumpReport r;
    r.m = m;
    r.predicted = jump_predicted(m);
    r.measured = side_limit(+1.0) - side_limit(-1.0);
    r.h = h;
    return r;
}

double local_quadratic_coefficient(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !arith::is_prime(p))
        throw std::invalid_argument("local_quadratic_coefficient: p must be an odd prime");
    const std::uint64_t cutoff = arith::sqrt_ceil(p);
    double sum = 0.0;
    for (std::uint64_t i = 2; i <= cutoff; ++i) {
        // sin(pi p / i) reduced through p mod i; the square kills the sign.
        const double s = std::sin(kPi * static_cast<double>(p % i) / static_cast<double>(i));
        sum += 1.0 / (s * s);
    }
    return kPi * kPi / static_cast<double>(p) * sum;
}

}  // namespace fejer
