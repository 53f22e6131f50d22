#include "oracles.hpp"

#include "modcm/census.hpp"
#include "modcm/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace modcm;

TEST_CASE("logarithmic integral against quadrature")
{
    CHECK(li(2.0) == 0.0);
    CHECK_THROWS_AS(li(1.5), InvalidArgument);
    for (double x : {2.5, 3.0, 10.0, 100.0, 1234.5, 1e4, 1e5, 1e6, 1e7, 1e8}) {
        const double want = oracle::li(x);
        REQUIRE(std::fabs(li(x) - want) <= 1e-10 * std::fabs(want));
    }
    CHECK(li(10.0) == doctest::Approx(5.1204).epsilon(1e-4));
    CHECK(li(1e6) == doctest::Approx(78626.5).epsilon(1e-6));
    double prev = 0.0;
    for (double x = 2.1; x < 1e4; x *= 1.3) {
        REQUIRE(li(x) > prev);
        prev = li(x);
    }
}

TEST_CASE("Li(x) log x / x tends to 1")
{
    double prev = 10.0;
    for (double x : {1e3, 1e5, 1e7, 1e9}) {
        const double r = li(x) * std::log(x) / x;
        CHECK(std::fabs(r - 1.0) < prev);
        prev = std::fabs(r - 1.0);
    }
    CHECK(prev < 0.06);
}

TEST_CASE("split prime counts")
{
    CHECK(split_prime_count(order_from_disc(-4), 20) == 3);
    CHECK(split_prime_count(order_from_disc(-3), 10) == 1);
    CHECK(split_prime_count(order_from_disc(-7), 2) == 1);
    CHECK(split_prime_count(order_from_disc(-4), 2) == 0);
    for (std::int64_t D : {-3L, -4L, -7L, -20L, -23L, -163L, -9068L, -1000L + 1})
        REQUIRE(split_prime_count(order_from_disc(D), 1e4) == oracle::split_count(D, 10000));
    CHECK_THROWS_AS(split_prime_count(order_from_disc(-4), 1e9), CeilingError);
    CHECK_THROWS_AS(split_prime_count(order_from_disc(-4), 1.0), InvalidArgument);
}

TEST_CASE("split prime counts are monotone in x")
{
    const OrderDisc o = order_from_disc(-47);
    std::uint64_t prev = 0;
    for (double x = 2; x < 5000; x += 37) {
        const auto c = split_prime_count(o, x);
        REQUIRE(c >= prev);
        prev = c;
    }
}

TEST_CASE("GRH-conditional bound")
{
    const auto r4 = grh_bound_check(-4, 1e4);
    CHECK(r4.within_bound);
    CHECK(r4.li_half == doctest::Approx(li(1e4) / 2));
    CHECK(r4.bound_rhs == doctest::Approx(std::sqrt(1e4) * (std::log(4.0) + 2 * std::log(1e4)) / 6));
    CHECK(grh_bound_check(-163, 1e5).within_bound);
    // At x = 2 the right side exceeds 1 once |d_K| >= 23.
    for (std::int64_t d : fundamental_discriminants(23, 500))
        REQUIRE(grh_bound_check(d, 2.0).within_bound);
    CHECK_THROWS_AS(grh_bound_check(-12, 1e3), InvalidArgument);
}

TEST_CASE("lower bound for split counts")
{
    const OrderDisc o = order_from_disc(-4);
    CHECK(split_count_lower_bound(o, 1e6) <= static_cast<double>(split_prime_count(o, 1e6)));
    // f = 1 has no conductor term; f = 3 lowers the bound.
    CHECK(split_count_lower_bound(order_from_disc(-36), 1e5) < split_count_lower_bound(o, 1e5));
    double prev = 1.0;
    for (double x : {1e4, 1e6, 1e8}) {
        const double ratio = split_count_lower_bound(o, x) / (x / std::log(x));
        CHECK(std::fabs(ratio - 0.5) < prev);
        prev = std::fabs(ratio - 0.5);
    }
}

TEST_CASE("Siegel trend table")
{
    const auto rows = siegel_trend({-23, -4, -3, -163});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].abs_disc == 3);
    CHECK(rows[1].abs_disc == 4);
    CHECK(rows[1].ratio == 0.0);
    CHECK(rows[2].h == 3);
    CHECK(rows[2].ratio == doctest::Approx(std::log(3.0) / (0.5 * std::log(23.0))));
    CHECK_THROWS_AS(siegel_trend({}), InvalidArgument);
    CHECK_THROWS_AS(median_ratio({}), InvalidArgument);

    const auto window = siegel_trend(fundamental_discriminants(9000, 10000));
    for (const auto& r : window)
        REQUIRE(r.h == oracle::class_number(-r.abs_disc));
    const double m = median_ratio(window);
    CHECK(m > 0.7);
    CHECK(m < 1.1);
}

TEST_CASE("fundamental discriminants")
{
    CHECK(fundamental_discriminants(1, 24) == std::vector<std::int64_t>{-3, -4, -7, -8, -11, -15, -19, -20, -23, -24});
}
