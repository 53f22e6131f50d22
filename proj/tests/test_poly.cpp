#include "oracles.hpp"

#include "modcm/modp.hpp"
#include "modcm/poly.hpp"

#include <doctest.h>

#include <random>

using namespace modcm;

namespace {

ZPoly random_poly(std::mt19937_64& rng, int deg, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    ZPoly p(static_cast<std::size_t>(deg) + 1);
    for (auto& c : p)
        c = d(rng);
    if (p.back() == 0)
        p.back() = 1;
    return p;
}

} // namespace

TEST_CASE("resultant agrees with the Sylvester determinant")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % 6);
        const ZPoly f = random_poly(rng, m, 50);
        const ZPoly g = random_poly(rng, n, 50);
        REQUIRE(resultant(f, g) == oracle::sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant vanishes on a common factor")
{
    const ZPoly common{-3, 1}; // X - 3
    const ZPoly f = mul(common, ZPoly{1, 1, 1});
    const ZPoly g = mul(common, ZPoly{-5, 0, 2});
    CHECK(resultant(f, g) == 0);
    CHECK(gcd(f, g) == common);
}

TEST_CASE("exact division and gcd")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const ZPoly a = random_poly(rng, 4, 20);
        const ZPoly b = random_poly(rng, 3, 20);
        ZPoly q;
        REQUIRE(divide_exact(mul(a, b), b, q));
        CHECK(q == a);
        const ZPoly g = gcd(mul(a, b), mul(b, ZPoly{1, 0, 1}));
        ZPoly t;
        CHECK(divide_exact(g, primitive_part(b), t));
    }
    ZPoly q;
    CHECK_FALSE(divide_exact(ZPoly{1, 0, 1}, ZPoly{1, 1}, q));
}

TEST_CASE("interpolation through consecutive integers")
{
    const ZPoly p{7, -3, 0, 2};
    std::vector<mpz_class> values;
    for (int x = 0; x <= 3; ++x)
        values.push_back(eval(p, mpz_class(x)));
    CHECK(interpolate_consecutive(values) == p);
    const std::vector<mpz_class> half{0, 1, 3}; // x(x+1)/2 is integral on Z but not in Z[x]
    CHECK_THROWS(interpolate_consecutive(half));
}

TEST_CASE("bivariate grid interpolation and evaluation")
{
    BiPoly F(2, 3);
    F.at(0, 0) = 5;
    F.at(2, 1) = -4;
    F.at(1, 3) = 9;
    std::vector<std::vector<mpz_class>> grid(3, std::vector<mpz_class>(4));
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 3; ++j)
            grid[i][j] = F.eval(i, j);
    CHECK(interpolate_grid(grid) == F);
    CHECK(F.transposed().coeff(3, 1) == 9);
    CHECK(F.specialize_x(2) == ZPoly{5, -16, 0, 18});
    CHECK(F.content() == 1);
    BiPoly q;
    CHECK(divide_exact(mul(F, F.transposed()), F, q));
    CHECK(q == F.transposed());
}

TEST_CASE("modular resultant reduces the integer resultant")
{
    const modp::Field field(modp::large_prime(0));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const ZPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 5), 1000);
        const ZPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 5), 1000);
        REQUIRE(field.resultant(field.reduce(f), field.reduce(g)) == field.reduce(resultant(f, g)));
    }
}

TEST_CASE("factor degrees mod p")
{
    const modp::Field field(101);
    // (X^2 + 2)(X - 1) over F_101: -2 is not a square mod 101 (101 = 5 mod 8).
    const auto deg = field.factor_degrees(field.reduce(mul(ZPoly{2, 0, 1}, ZPoly{-1, 1})));
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2});
    CHECK(field.factor_degrees(field.reduce(mul(ZPoly{-1, 1}, ZPoly{-1, 1}))).empty());
}
