#include "fejerprime/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace fejer::arith {

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = 1, m = n;
    while (m >= 4) {
        r *= 2;
        m /= 4;
    }
    // r is a power of two with r^2 <= n; refine bit by bit.
    for (std::uint64_t bit = r / 2; bit > 0; bit /= 2) {
        const std::uint64_t cand = r + bit;
        if (cand <= UINT64_C(0xFFFFFFFF) && cand * cand <= n) r = cand;
    }
    return r;
}

std::uint64_t sqrt_ceil(std::uint64_t n) {
    const std::uint64_t r = isqrt(n);
    return r * r == n ? r : r + 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t tau(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("tau: n must be >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        count += (d == n / d) ? 1 : 2;
    }
    return count;
}

std::uint64_t sigma(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("sigma: n must be >= 1");
    std::uint64_t sum = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += d;
        if (d != n / d) sum += n / d;
    }
    return sum;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint8_t> prime_table(std::uint64_t limit) {
    std::vector<std::uint8_t> is_p(limit + 1, 1);
    is_p[0] = 0;
    if (limit >= 1) is_p[1] = 0;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!is_p[p]) continue;
        for (std::uint64_t q = p * p; q <= limit; q += p) is_p[q] = 0;
    }
    return is_p;
}

std::uint64_t prime_pi(double x) {
    if (x < 2.0) return 0;
    const std::uint64_t limit = static_cast<std::uint64_t>(x);
    if (limit <= UINT64_C(10000000)) {
        const auto table = prime_table(limit);
        std::uint64_t count = 0;
        for (std::uint64_t n = 2; n <= limit; ++n) count += table[n];
        return count;
    }
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= limit; ++n) count += is_prime(n) ? 1 : 0;
    return count;
}

}  // namespace fejer::arith
