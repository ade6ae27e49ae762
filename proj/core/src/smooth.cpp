#include "fejerprime/smooth.hpp"

#include <cmath>
#include <stdexcept>

#include "fejerprime/arith.hpp"
#include "fejerprime/cutoff.hpp"

namespace fejer {

namespace {

constexpr std::int64_t kMaxCut = 1000000;

inline void kahan_add(double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

// Certified tails. For i > M >= b+1 and x in [a, b],
//   phi_kappa(i/(x+1)) <= e^{-2 kappa (i/(b+1) - 1)} = r^{i - (b+1)},
// with r = e^{-c}, c = 2 kappa/(b+1); the decay starts past the index b+1,
// not at zero, because c (b+1) = 2 kappa exactly.
inline double tau_tail(std::int64_t cut, double c, double b, double one_minus_r) {
    return std::exp(-c * (static_cast<double>(cut) - b)) / one_minus_r;
}

// sum_{i>M} i r^{i-(b+1)} <= (M+2) r^{M-b} / (1-r)^2.
inline double sigma_tail(std::int64_t cut, double c, double b, double one_minus_r) {
    return (static_cast<double>(cut) + 2.0) *
           std::exp(-c * (static_cast<double>(cut) - b)) /
           (one_minus_r * one_minus_r);
}

}  // namespace

TruncationPlan plan_truncation(TruncationPlan::Kind kind, double a, double b,
                               double kappa, double eps) {
    if (!(0.0 < a && a <= b)) throw std::invalid_argument("plan_truncation: need 0 < a <= b");
    if (!(kappa > 0.0)) throw std::invalid_argument("plan_truncation: kappa must be > 0");
    if (!(0.0 < eps && eps < 1.0)) throw std::invalid_argument("plan_truncation: need 0 < eps < 1");

    const double c = 2.0 * kappa / (b + 1.0);
    const double one_minus_r = -std::expm1(-c);  // 1 - e^{-c}, no cancellation
    if (one_minus_r <= 0.0)
        throw std::runtime_error("plan_truncation: kappa too small, geometric rate underflows");

    // Indices above M must satisfy i/(x+1) >= 1 everywhere on [a, b].
    const std::int64_t floor_cut = static_cast<std::int64_t>(std::ceil(b + 1.0));

    TruncationPlan plan;
    plan.kind = kind;
    plan.eps = eps;
    plan.kappa = kappa;
    plan.a = a;
    plan.b = b;

    if (kind == TruncationPlan::Kind::tau) {
        const double formula = b + std::log(1.0 / (one_minus_r * eps)) / c;
        std::int64_t cut = floor_cut;
        if (formula > static_cast<double>(cut)) {
            if (formula > static_cast<double>(kMaxCut))
                throw std::runtime_error("plan_truncation: cut index cap exceeded");
            cut = static_cast<std::int64_t>(std::ceil(formula));
        }
        plan.cut = cut;
        plan.tail_bound = tau_tail(cut, c, b, one_minus_r);
    } else {
        std::int64_t cut = floor_cut;
        while (sigma_tail(cut, c, b, one_minus_r) > eps) {
            if (++cut > kMaxCut)
                throw std::runtime_error("plan_truncation: cut index cap exceeded");
        }
        plan.cut = cut;
        plan.tail_bound = sigma_tail(cut, c, b, one_minus_r);
    }
    return plan;
}

SmoothValue p_tau(double x, double kappa, double eps, const ResonanceGuard& guard) {
    if (!(x > 0.0)) throw std::invalid_argument("p_tau: x must be > 0");
    const auto plan = plan_truncation(TruncationPlan::Kind::tau, x, x, kappa, eps);
    const double sx = sin_pi(x);
    const double sin2 = sx * sx;
    // The -1 normalization joins the compensated sum so the near-prime
    // cancellation against the weight of the divisor term stays sharp.
    double sum = -1.0, comp = 0.0;
    for (std::int64_t i = 2; i <= plan.cut; ++i) {
        const double id = static_cast<double>(i);
        const double w = phi(id / (x + 1.0), kappa);
        if (w == 0.0) continue;
        kahan_add(sum, comp, w * detail::quotient_term(x, i, guard, sin2) / (id * id));
    }
    return {x, kappa, sum + comp, plan.tail_bound, plan.cut};
}

SmoothValue p_sigma(double x, double kappa, double eps, const ResonanceGuard& guard) {
    if (!(x > 0.0)) throw std::invalid_argument("p_sigma: x must be > 0");
    const auto plan = plan_truncation(TruncationPlan::Kind::sigma, x, x, kappa, eps);
    const double sx = sin_pi(x);
    const double sin2 = sx * sx;
    double sum = -x, comp = 0.0;
    for (std::int64_t i = 2; i <= plan.cut; ++i) {
        const double id = static_cast<double>(i);
        const double w = phi(id / (x + 1.0), kappa);
        if (w == 0.0) continue;
        kahan_add(sum, comp, w * detail::quotient_term(x, i, guard, sin2) / id);
    }
    return {x, kappa, sum + comp, plan.tail_bound, plan.cut};
}

double p_tau_integer(std::uint64_t n, double kappa) {
    if (n < 2) throw std::invalid_argument("p_tau_integer: n must be >= 2");
    const double np1 = static_cast<double>(n) + 1.0;
    double sum = 0.0;
    for (const std::uint64_t d : arith::divisors(n)) {
        if (d < 2) continue;
        sum += phi_ratio(static_cast<double>(d), np1, kappa);
    }
    return sum - 1.0;
}

double p_sigma_integer(std::uint64_t n, double kappa) {
    if (n < 2) throw std::invalid_argument("p_sigma_integer: n must be >= 2");
    const double np1 = static_cast<double>(n) + 1.0;
    double sum = 0.0;
    for (const std::uint64_t d : arith::divisors(n)) {
        if (d < 2) continue;
        sum += static_cast<double>(d) * phi_ratio(static_cast<double>(d), np1, kappa);
    }
    return sum - static_cast<double>(n);
}

double b_infinity_tau(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !arith::is_prime(p))
        throw std::invalid_argument("b_infinity_tau: p must be an odd prime");
    const double pd = static_cast<double>(p);
    double sum = 0.0;
    for (std::uint64_t i = 2; i <= p; ++i) {
        if (i == p) continue;
        const double id = static_cast<double>(i);
        const double s = std::sin(kPi * static_cast<double>(p % i) / id);
        sum += kPi * kPi / (id * id * s * s);
    }
    const double ip1 = pd + 1.0;
    const double s1 = std::sin(kPi / ip1);
    sum += 0.5 * kPi * kPi / (ip1 * ip1 * s1 * s1);  // threshold index carries weight 1/2
    sum -= kPi * kPi / 3.0 * (1.0 - 1.0 / (pd * pd));
    return sum;
}

double sigma_residual(std::uint64_t p, double kappa) {
    if (p < 3 || p % 2 == 0 || !arith::is_prime(p))
        throw std::invalid_argument("sigma_residual: p must be an odd prime");
    const double pd = static_cast<double>(p);
    return pd * phi_complement(pd / (pd + 1.0), kappa);
}

}  // namespace fejer
