#include "vtc/numth.hpp"

#include <numeric>
#include <stdexcept>

namespace vtc::numth {

namespace {

void require_positive(std::uint64_t n, const char* fn) {
    if (n == 0)
        throw std::domain_error(std::string(fn) + ": argument must be >= 1");
}

// Distinct prime factors with multiplicities, by trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1u);
    return out;
}

} // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

std::uint64_t euler_phi(std::uint64_t n) {
    require_positive(n, "euler_phi");
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

int moebius(std::uint64_t n) {
    require_positive(n, "moebius");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e >= 2)
            return 0;
        sign = -sign;
    }
    return sign;
}

std::int64_t ramanujan_sum(std::uint64_t d, std::uint64_t a) {
    require_positive(d, "ramanujan_sum");
    const std::uint64_t g = std::gcd(d, a);
    const std::uint64_t m = d / g;
    const std::uint64_t phi_d = euler_phi(d);
    const std::uint64_t phi_m = euler_phi(m);
    if (phi_d % phi_m != 0)
        throw std::logic_error("ramanujan_sum: non-exact division");
    return moebius(m) * static_cast<std::int64_t>(phi_d / phi_m);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    require_positive(n, "divisors");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        low.push_back(d);
        if (d != n / d)
            high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<std::uint64_t> odd_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : divisors(n))
        if (d % 2 == 1)
            out.push_back(d);
    return out;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        throw std::domain_error("binom: k > n");
    if (k > n - k)
        k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i; // r * (n-k+i) / i is the exact value of C(n-k+i, i)
        r /= i;
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binom: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace vtc::numth
