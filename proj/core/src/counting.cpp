#include "fejerprime/counting.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fejerprime/arith.hpp"
#include "fejerprime/smooth.hpp"

namespace fejer {

namespace {

inline void kahan_add(double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

inline std::uint64_t floor_arg(double x, const char* who) {
    if (!(x >= 2.0)) throw std::invalid_argument(std::string(who) + ": x must be >= 2");
    return static_cast<std::uint64_t>(x);
}

inline void validate(const HVariantParams& p) {
    if (!(p.alpha > 0.5 * std::log(2.0)))
        throw std::invalid_argument("H-variant: alpha must exceed log(2)/2");
    if (!(p.gamma > 1.0)) throw std::invalid_argument("H-variant: gamma must exceed 1");
    if (!(p.lambda >= 1.0)) throw std::invalid_argument("H-variant: lambda must be >= 1");
}

// a_n = eps / (g + eps) with the ratio pushed through the log domain when
// eps underflows; (n+1)^{-gamma} at large n and gamma is representable but
// naive g/eps quotients are not always.
inline double gating_term(double g, std::uint64_t n, double gamma) {
    if (g == 0.0) return 1.0;
    const double log_eps = -gamma * std::log(static_cast<double>(n) + 1.0);
    const double eps = std::exp(log_eps);
    if (eps > 0.0) return eps / (g + eps);
    const double log_ratio = std::log(g) - log_eps;  // g/eps in log space
    return log_ratio > 700.0 ? 0.0 : 1.0 / (1.0 + std::exp(log_ratio));
}

}  // namespace

double pi_baseline(double x, const BaselineParams& params) {
    const std::uint64_t limit = floor_arg(x, "pi_baseline");
    if (!(params.threshold > 0.0)) throw std::invalid_argument("pi_baseline: C must be > 0");
    if (!(params.kappa > 0.0)) throw std::invalid_argument("pi_baseline: kappa must be > 0");
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const double g = std::abs(p_tau_integer(n, params.kappa));
        kahan_add(sum, comp, params.threshold / (g + params.threshold));
    }
    return sum + comp;
}

double b_alpha(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("b_alpha: alpha must be > 0");
    const double e = std::exp(-2.0 * alpha);
    return e / (1.0 + e);
}

double composite_gap(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("composite_gap: alpha must be > 0");
    return 1.0 - 2.0 * std::exp(-2.0 * alpha);
}

double gamma_admissible_max(double alpha, double range, double lambda) {
    if (!(alpha > 0.0)) throw std::invalid_argument("gamma_admissible_max: alpha must be > 0");
    if (!(range >= 2.0)) throw std::invalid_argument("gamma_admissible_max: X must be >= 2");
    if (!(lambda >= 1.0)) throw std::invalid_argument("gamma_admissible_max: lambda must be >= 1");
    // log(e^{2 alpha} + 1) = 2 alpha + log1p(e^{-2 alpha}), overflow-free.
    const double log_b_inv = 2.0 * alpha + std::log1p(std::exp(-2.0 * alpha));
    return (log_b_inv - std::log(lambda)) / std::log(range + 1.0);
}

double pi_h(double x, const HVariantParams& params) {
    const std::uint64_t limit = floor_arg(x, "pi_h");
    validate(params);
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const double kappa_n = params.alpha * (static_cast<double>(n) + 1.0);
        const double g = std::abs(p_tau_integer(n, kappa_n));
        kahan_add(sum, comp, gating_term(g, n, params.gamma));
    }
    return sum + comp;
}

ErrorDecomposition error_decomposition(double x, const HVariantParams& params) {
    const std::uint64_t limit = floor_arg(x, "error_decomposition");
    validate(params);
    const double b = b_alpha(params.alpha);
    const auto table = arith::prime_table(limit);

    ErrorDecomposition out;
    double comp_c = 0.0, comp_p = 0.0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (table[n]) {
            const double eps = std::pow(static_cast<double>(n) + 1.0, -params.gamma);
            kahan_add(out.prime_deficit, comp_p, b / (b + eps));
        } else {
            const double kappa_n = params.alpha * (static_cast<double>(n) + 1.0);
            const double g = std::abs(p_tau_integer(n, kappa_n));
            kahan_add(out.composite_leakage, comp_c, gating_term(g, n, params.gamma));
        }
    }
    out.composite_leakage += comp_c;
    out.prime_deficit += comp_p;

    // sum_{n>=4} (n+1)^{-gamma} by partial summation, closed by the integral
    // tail bound once that bound drops below 1e-15.
    double zeta_like = 0.0, comp_z = 0.0;
    std::uint64_t n = 4;
    for (;; ++n) {
        kahan_add(zeta_like, comp_z, std::pow(static_cast<double>(n) + 1.0, -params.gamma));
        const double tail =
            std::pow(static_cast<double>(n) + 1.0, 1.0 - params.gamma) / (params.gamma - 1.0);
        if (tail < 1e-15) {
            zeta_like += tail;
            break;
        }
    }
    out.leakage_bound = (zeta_like + comp_z) / composite_gap(params.alpha);
    return out;
}

}  // namespace fejer
