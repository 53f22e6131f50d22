#include "modcm/arith.hpp"

#include <cstdlib>
#include <numeric>

namespace modcm {

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

XGcd xgcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for n < 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    n = std::llabs(n);
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(std::int64_t n)
{
    for (auto [p, e] : factorize(n))
        if (e > 1)
            return false;
    return n != 0;
}

int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            result = -result;
    }
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v > 0) {
        if ((a & 1) == 0)
            return 0;
        std::int64_t a8 = mod_floor(a, 8);
        if ((v & 1) && (a8 == 3 || a8 == 5))
            result = -result;
    }
    // Jacobi symbol (a/n) for odd n > 0.
    a = mod_floor(a, n);
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            std::int64_t n8 = n & 7;
            if (n8 == 3 || n8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int odd_prime_divisor_count(std::int64_t n)
{
    int count = 0;
    for (auto [p, e] : factorize(n))
        if (p != 2)
            ++count;
    return count;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit)
{
    std::vector<std::uint32_t> primes;
    if (limit < 2)
        return primes;
    // Odd-only sieve: index i stands for 2i+1.
    std::vector<bool> composite(limit / 2 + 1, false);
    primes.push_back(2);
    for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
        if (composite[i])
            continue;
        std::uint64_t p = 2 * i + 1;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p)
            composite[m / 2] = true;
    }
    return primes;
}

} // namespace modcm
