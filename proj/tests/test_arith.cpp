#include "oracles.hpp"

#include "modcm/arith.hpp"

#include <doctest.h>

#include <random>

using namespace modcm;

TEST_CASE("gcd and extended gcd")
{
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(0, -7) == 7);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
    for (int k = 0; k < 1000; ++k) {
        const auto a = dist(rng), b = dist(rng);
        const auto r = xgcd(a, b);
        CHECK(r.g == gcd(a, b));
        CHECK(a * r.x + b * r.y == r.g);
    }
}

TEST_CASE("mod_floor is nonnegative")
{
    CHECK(mod_floor(-1, 5) == 4);
    CHECK(mod_floor(-10, 5) == 0);
    CHECK(mod_floor(7, 5) == 2);
}

TEST_CASE("primality agrees with trial division")
{
    for (std::uint64_t n = 0; n < 20000; ++n)
        REQUIRE(is_prime(n) == oracle::is_prime(n));
    CHECK(is_prime(2305843009213693951ULL)); // 2^61 - 1
    CHECK_FALSE(is_prime(2305843009213693953ULL));
}

TEST_CASE("sieve matches trial division")
{
    const auto primes = primes_up_to(5000);
    std::vector<std::uint32_t> expect;
    for (std::uint32_t n = 2; n <= 5000; ++n)
        if (oracle::is_prime(n))
            expect.push_back(n);
    CHECK(primes == expect);
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == std::vector<std::uint32_t>{2});
}

TEST_CASE("factorization and square-freeness")
{
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::int64_t, int>{2, 3});
    CHECK(f[1] == std::pair<std::int64_t, int>{3, 2});
    CHECK(f[2] == std::pair<std::int64_t, int>{5, 1});
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    for (std::int64_t n = 1; n < 3000; ++n)
        REQUIRE(odd_prime_divisor_count(n) == oracle::odd_prime_count(n));
    CHECK(odd_prime_divisor_count(-9068) == 1);
}

TEST_CASE("Kronecker symbol at primes agrees with Euler's criterion")
{
    for (std::int64_t D = -3; D > -2000; --D) {
        const auto m = mod_floor(D, 4);
        if (m != 0 && m != 1)
            continue;
        for (std::uint64_t p = 2; p < 200; ++p)
            if (oracle::is_prime(p))
                REQUIRE((kronecker(D, static_cast<std::int64_t>(p)) == 1) == oracle::splits(D, p));
    }
}

TEST_CASE("Kronecker symbol is multiplicative in the bottom argument")
{
    for (std::int64_t a = -60; a <= 60; ++a)
        for (std::int64_t m = 1; m < 40; ++m)
            for (std::int64_t n = 1; n < 40; ++n)
                REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(-3, 7) == 1);
    CHECK(kronecker(-9068, 3) == 1);
    CHECK(kronecker(5, 0) == 0);
    CHECK(kronecker(1, 0) == 1);
}
