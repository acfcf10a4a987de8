#pragma once

#include <cstdint>
#include <vector>

// Exact integer number theory backing the counting formulas. Everything here
// runs at desk scale (arguments up to a few thousand), so factorization is
// plain trial division and every result is an exact machine integer.

namespace vtc::numth {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Count of 1 <= k <= n coprime to n. Throws std::domain_error for n == 0.
std::uint64_t euler_phi(std::uint64_t n);

// 0 if n has a squared prime factor, otherwise (-1)^(number of prime
// factors). Throws std::domain_error for n == 0.
int moebius(std::uint64_t n);

// Ramanujan sum c_d(a) = phi(d) * mu(d/g) / phi(d/g) with g = gcd(d, a).
// The division is exact; a non-exact division throws std::logic_error.
std::int64_t ramanujan_sum(std::uint64_t d, std::uint64_t a);

// All divisors of n, ascending (starts with 1, ends with n).
std::vector<std::uint64_t> divisors(std::uint64_t n);

// The odd divisors of n, ascending.
std::vector<std::uint64_t> odd_divisors(std::uint64_t n);

// Exact binomial coefficient. Throws std::domain_error for k > n and
// std::overflow_error if the value does not fit in 64 bits.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

} // namespace vtc::numth
