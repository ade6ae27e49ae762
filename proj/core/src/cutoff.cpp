#include "fejerprime/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace fejer {

namespace {

// exp argument clamp; beyond it the logistic is exactly 0 or 1 in double.
constexpr double kExpClamp = 700.0;

inline void require_kappa(double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("cutoff: kappa must be > 0");
}

// 1 / (1 + e^z), branch chosen so the exp argument is never positive.
inline double logistic_neg(double z) {
    if (z > kExpClamp) return 0.0;
    if (z < -kExpClamp) return 1.0;
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(z));
}

}  // namespace

double phi(double u, double kappa) {
    require_kappa(kappa);
    return logistic_neg(2.0 * kappa * (u - 1.0));
}

double phi_complement(double u, double kappa) {
    require_kappa(kappa);
    return logistic_neg(-2.0 * kappa * (u - 1.0));
}

double phi_ratio(double num, double den, double kappa) {
    require_kappa(kappa);
    return logistic_neg(2.0 * kappa * (num - den) / den);
}

}  // namespace fejer
