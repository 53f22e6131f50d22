#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modcm {

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct XGcd {
    std::int64_t g, x, y;
};
XGcd xgcd(std::int64_t a, std::int64_t b);

/// Floor-mod with a nonnegative result for m > 0.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(std::uint64_t n);
bool is_squarefree(std::int64_t n);

/// Distinct prime factors with multiplicity, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Kronecker symbol (a/n) for arbitrary integers a and n.
int kronecker(std::int64_t a, std::int64_t n);

/// Number of distinct odd primes dividing n.
int odd_prime_divisor_count(std::int64_t n);

/// Primes up to and including `limit` (segmented-free simple sieve).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

} // namespace modcm
