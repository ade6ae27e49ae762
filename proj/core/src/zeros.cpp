#include "fejerprime/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fejerprime/arith.hpp"
#include "fejerprime/cutoff.hpp"
#include "fejerprime/smooth.hpp"

namespace fejer {

namespace {

inline void require_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !arith::is_prime(p))
        throw std::invalid_argument("companion zeros: p must be an odd prime");
}

// Collect sign changes of f on an explicit grid anchored at `anchor`:
// samples anchor + k*step for k in [k_lo, k_hi]. Anchoring matters because
// the interesting zeros can sit within a few ulps of the prime itself.
std::vector<Bracket> scan_anchored(const std::function<double(double)>& f,
                                   double anchor, double step,
                                   std::int64_t k_lo, std::int64_t k_hi) {
    std::vector<Bracket> out;
    double x_prev = anchor + static_cast<double>(k_lo) * step;
    bool pos_prev = f(x_prev) > 0.0;
    for (std::int64_t k = k_lo + 1; k <= k_hi; ++k) {
        const double x = anchor + static_cast<double>(k) * step;
        const bool pos = f(x) > 0.0;
        if (pos != pos_prev) out.push_back({x_prev, x});
        x_prev = x;
        pos_prev = pos;
    }
    return out;
}

// Nearest roots on either side of `center` among the bracketed changes.
void pick_nearest(const std::function<double(double)>& f,
                  const std::vector<Bracket>& brackets, double center,
                  double tol, std::optional<double>& left,
                  std::optional<double>& right) {
    for (const auto& b : brackets) {
        const double root = bisect(f, b, tol);
        if (root < center) {
            if (!left || root > *left) left = root;
        } else if (root > center) {
            if (!right || root < *right) right = root;
        }
    }
}

}  // namespace

std::vector<Bracket> find_sign_changes(const std::function<double(double)>& f,
                                       double a, double b, double step) {
    if (!(a < b)) throw std::invalid_argument("find_sign_changes: need a < b");
    if (!(step > 0.0)) throw std::invalid_argument("find_sign_changes: need step > 0");
    std::vector<Bracket> out;
    double x_prev = a;
    bool pos_prev = f(a) > 0.0;
    for (std::int64_t k = 1;; ++k) {
        double x = a + static_cast<double>(k) * step;
        if (x > b) {
            if (x_prev >= b) break;
            x = b;
        }
        const bool pos = f(x) > 0.0;
        if (pos != pos_prev) out.push_back({x_prev, x});
        x_prev = x;
        pos_prev = pos;
        if (x == b) break;
    }
    return out;
}

double bisect(const std::function<double(double)>& f, Bracket bracket, double tol) {
    double lo = bracket.lo, hi = bracket.hi;
    if (!(lo < hi)) throw std::invalid_argument("bisect: empty bracket");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: no sign change on the bracket");
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval no longer splittable
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ZeroPair::left_gap() const {
    if (!left) throw std::logic_error("ZeroPair: left zero absent");
    return static_cast<double>(p) - *left;
}

double ZeroPair::right_gap() const {
    if (!right) throw std::logic_error("ZeroPair: right zero absent");
    return *right - static_cast<double>(p);
}

ZeroPair companion_zeros_tau(std::uint64_t p, double kappa) {
    require_odd_prime(p);
    if (!(kappa > 0.0)) throw std::invalid_argument("companion_zeros_tau: kappa must be > 0");
    const double pd = static_cast<double>(p);
    const auto f = [&](double x) { return p_tau(x, kappa).value; };

    // Expected gap scale, from the local model -delta + B t^2.
    const double delta = phi_complement(pd / (pd + 1.0), kappa);
    const double bcoef = b_infinity_tau(p);
    const double gap_scale = std::sqrt(std::max(delta, 1e-300) / bcoef);

    const double step =
        std::max(1e-9, 1e-4 * std::min(1.0, std::exp(-kappa / (2.0 * (pd + 1.0)))));
    const double half_window =
        std::min(0.45, std::max(64.0 * gap_scale, 32.0 * step));
    std::int64_t k_max = static_cast<std::int64_t>(std::ceil(half_window / step));
    k_max = std::min<std::int64_t>(k_max, 1000000);

    auto brackets = scan_anchored(f, pd, step, -k_max, k_max);

    // Coarse sweep over the rest of (p - 1/2, p + 1/2) so zeros at O(1)
    // distance are not missed when the fine window is narrow.
    const double fine_lo = pd - static_cast<double>(k_max) * step;
    const double fine_hi = pd + static_cast<double>(k_max) * step;
    if (fine_lo > pd - 0.5) {
        auto extra = find_sign_changes(f, pd - 0.5, fine_lo, 1e-3);
        brackets.insert(brackets.end(), extra.begin(), extra.end());
    }
    if (fine_hi < pd + 0.5) {
        auto extra = find_sign_changes(f, fine_hi, pd + 0.5, 1e-3);
        brackets.insert(brackets.end(), extra.begin(), extra.end());
    }

    ZeroPair out;
    out.p = p;
    out.kappa = kappa;
    const double tol = std::max(1e-13, 1e-3 * gap_scale);
    pick_nearest(f, brackets, pd, tol, out.left, out.right);
    return out;
}

ZeroPair companion_zeros_sigma(std::uint64_t p, double kappa) {
    require_odd_prime(p);
    if (!(kappa > 0.0)) throw std::invalid_argument("companion_zeros_sigma: kappa must be > 0");
    const double pd = static_cast<double>(p);
    const auto f = [&](double x) { return p_sigma(x, kappa).value; };

    ZeroPair out;
    out.p = p;
    out.kappa = kappa;

    // Left zero lives in (p - 2 Delta, p - Delta/2); scan a 4*Delta margin.
    const double delta = sigma_residual(p, kappa);
    if (delta > 0.0) {
        const double step = delta / 16.0;
        const auto brackets = scan_anchored(f, pd, step, -64, 0);
        std::optional<double> unused;
        pick_nearest(f, brackets, pd, std::max(1e-16 * pd, 1e-3 * delta), out.left,
                     unused);
    }

    // Right zero sits at O(1) distance; a plain coarse scan suffices.
    const auto brackets = find_sign_changes(f, pd + 1e-6, pd + 1.0, 1e-3);
    std::optional<double> unused;
    pick_nearest(f, brackets, pd, 1e-13, unused, out.right);
    return out;
}

DecayFit decay_fit(const std::vector<std::pair<double, double>>& kappa_gap) {
    if (kappa_gap.size() < 3)
        throw std::invalid_argument("decay_fit: need at least 3 points");
    for (const auto& [k, gap] : kappa_gap) {
        if (!(gap > 0.0)) throw std::invalid_argument("decay_fit: gaps must be positive");
    }
    const double n = static_cast<double>(kappa_gap.size());
    double mean_k = 0.0, mean_y = 0.0;
    for (const auto& [k, gap] : kappa_gap) {
        mean_k += k;
        mean_y += std::log(gap);
    }
    mean_k /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [k, gap] : kappa_gap) {
        const double dk = k - mean_k;
        sxx += dk * dk;
        sxy += dk * (std::log(gap) - mean_y);
    }
    DecayFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_k;
    double ss = 0.0;
    for (const auto& [k, gap] : kappa_gap) {
        const double r = std::log(gap) - (fit.intercept + fit.slope * k);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace fejer
