#include "fejerprime/fejer_term.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fejer {

namespace {

inline void kahan_add(double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

inline void require_index(std::int64_t i) {
    if (i < 2) throw std::invalid_argument("fejer: index i must be >= 2");
}

}  // namespace

std::int64_t round_half_up(double u) {
    return static_cast<std::int64_t>(std::floor(u + 0.5));
}

double sin_pi(double x) {
    const double m = std::floor(x + 0.5);
    const double f = x - m;  // exact for |x| >= 1/2, |f| <= 1/2
    const double s = std::sin(kPi * f);
    return std::fmod(m, 2.0) == 0.0 ? s : -s;
}

NearestLattice nearest_lattice(double x, std::int64_t i) {
    require_index(i);
    const std::int64_t m = round_half_up(x / static_cast<double>(i));
    return {m, x - static_cast<double>(i) * static_cast<double>(m)};
}

double ResonanceGuard::taylor_window(std::int64_t i) {
    return std::min(static_cast<double>(i) / 8.0, 1.0 / kPi);
}

void ResonanceGuard::validate() const {
    if (!(0.0 < eps_int && eps_int < eps_res && eps_res < 1.0))
        throw std::invalid_argument("ResonanceGuard: need 0 < eps_int < eps_res < 1");
}

double fejer_cosine_poly(double x, std::int64_t i) {
    require_index(i);
    // Split x = n + f with integer n. k*n mod i is then reduced in exact
    // integer arithmetic, which keeps every cosine argument in [0, 4 pi)
    // and avoids the O(k x / i) phase error of the naive evaluation.
    const double nd = std::floor(x);
    const double f = x - nd;
    const std::int64_t n_mod = ((static_cast<std::int64_t>(nd) % i) + i) % i;
    const double id = static_cast<double>(i);
    double sum = 0.0, comp = 0.0;
    for (std::int64_t k = 1; k < i; ++k) {
        const std::int64_t kn_mod = k * n_mod % i;
        const double arg = 2.0 * kPi * (static_cast<double>(kn_mod) + static_cast<double>(k) * f) / id;
        kahan_add(sum, comp, 2.0 * static_cast<double>(i - k) * std::cos(arg));
    }
    return id + (sum + comp);
}

double fejer_taylor_surrogate(double x, std::int64_t i) {
    require_index(i);
    const auto [m, t] = nearest_lattice(x, i);
    if (std::abs(t) > ResonanceGuard::taylor_window(i))
        throw std::domain_error("fejer_taylor_surrogate: offset outside the Taylor window");
    const double id = static_cast<double>(i);
    const double alpha = (1.0 / 6.0) * (1.0 - 1.0 / (id * id));
    const double pt = kPi * t;
    const double v = id * id * (1.0 - 2.0 * alpha * pt * pt);
    return v > 0.0 ? v : 0.0;  // clamp allowed only in this branch
}

namespace detail {

double quotient_term(double x, std::int64_t i, const ResonanceGuard& guard,
                     double sin2_pi_x) {
    const double id = static_cast<double>(i);
    const std::int64_t mt = round_half_up(x / id);
    const double delta = x - id * static_cast<double>(mt);  // exact
    // frac = x/i - round(x/i); |sin(pi x / i)| = |sin(pi frac)|, evaluated
    // on the reduced argument so large x costs no phase accuracy.
    const double frac = delta / id;
    const double denom = std::sin(kPi * frac);
    const bool resonant = std::abs(frac) < std::max(guard.eps_res, 0.1 / id) ||
                          std::abs(denom) < guard.eps_res;
    if (!resonant) return sin2_pi_x / (denom * denom);

    // x/i is close to an integer: the quotient loses significance.
    const std::int64_t nearest = round_half_up(x);
    if (std::abs(x - static_cast<double>(nearest)) < guard.eps_int && nearest % i == 0)
        return id * id;  // exact divisor

    if (std::abs(delta) <= ResonanceGuard::taylor_window(i)) {
        const double alpha = (1.0 / 6.0) * (1.0 - 1.0 / (id * id));
        const double pd = kPi * delta;
        const double v = id * id * (1.0 - 2.0 * alpha * pd * pd);
        return v > 0.0 ? v : 0.0;
    }
    return fejer_cosine_poly(x, i);
}

CertifiedValue rpf_term(std::int64_t i, int pole_pairs, double sin2_pi_x,
                        double t) {
    const double id = static_cast<double>(i);
    // Nearest pole first, then the symmetric pairs; x - i(m +- r) = t -+ i r
    // is formed in offset coordinates, which is exact.
    double sum = 1.0 / (t * t), comp = 0.0;
    for (int r = 1; r <= pole_pairs; ++r) {
        const double off = id * static_cast<double>(r);
        const double dm = t - off;
        const double dp = t + off;
        kahan_add(sum, comp, 1.0 / (dm * dm));
        kahan_add(sum, comp, 1.0 / (dp * dp));
    }
    const double pi2 = kPi * kPi;
    CertifiedValue out;
    out.value = id * id / pi2 * sin2_pi_x * (sum + comp);
    // Dropped tail: sum_{r>K} (r-1/2)^{-2} = psi'(K+1/2) <= 1/z + 1/z^2 at
    // z = K+1/2 (largest term plus integral tail). The plain integral
    // estimate 1/z undercounts the midpoint sum, by pi^2/4 at K = 0.
    const double z = static_cast<double>(pole_pairs) + 0.5;
    out.abs_error_bound = sin2_pi_x / pi2 * 2.0 * (1.0 / z + 1.0 / (z * z));
    return out;
}

}  // namespace detail

double fejer_sine_quotient(double x, std::int64_t i, const ResonanceGuard& guard) {
    require_index(i);
    const double sx = sin_pi(x);
    return detail::quotient_term(x, i, guard, sx * sx);
}

CertifiedValue fejer_rpf(double x, std::int64_t i, int pole_pairs,
                         const ResonanceGuard& guard) {
    require_index(i);
    if (pole_pairs < 0) throw std::invalid_argument("fejer_rpf: K must be >= 0");
    const auto [m, t] = nearest_lattice(x, i);
    if (std::abs(t) < guard.eps_int) {
        // Removable singularity: exact value, nothing truncated.
        return {static_cast<double>(i) * static_cast<double>(i), 0.0};
    }
    const double sx = sin_pi(x);
    return detail::rpf_term(i, pole_pairs, sx * sx, t);
}

std::pair<double, double> pole_sum_bounds(double x, std::int64_t i) {
    require_index(i);
    const auto [m, t] = nearest_lattice(x, i);
    if (t == 0.0)
        throw std::domain_error("pole_sum_bounds: x is an exact lattice point");
    const double lo = 1.0 / (t * t);
    const double id = static_cast<double>(i);
    return {lo, lo + kPi * kPi / (id * id)};
}

double fejer(double x, std::int64_t i, EvalStrategy strategy,
             const ResonanceGuard& guard) {
    switch (strategy.kind) {
        case EvalKind::cosine_poly:
            return fejer_cosine_poly(x, i);
        case EvalKind::rpf:
            return fejer_rpf(x, i, strategy.rpf_terms, guard).value;
        case EvalKind::sine_quotient:
        case EvalKind::automatic:
            return fejer_sine_quotient(x, i, guard);
    }
    throw std::logic_error("fejer: unknown strategy");
}

}  // namespace fejer
