#include "oracles.hpp"

#include "modcm/arith.hpp"
#include "modcm/errors.hpp"
#include "modcm/quadorders.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace modcm;

namespace {

oracle::Triple triple(const QuadForm& q)
{
    return {q.a, q.b, q.c};
}

} // namespace

TEST_CASE("orders from discriminants")
{
    const OrderDisc o = order_from_disc(-16);
    CHECK(o.fundamental == -4);
    CHECK(o.conductor == 2);
    CHECK(order_from_disc(-9068).fundamental == -2267);
    CHECK(order_from_disc(-9068).conductor == 2);
    CHECK(order_from_disc(-3).conductor == 1);
    CHECK(order_from_disc(-27).fundamental == -3);
    CHECK(order_from_disc(-27).conductor == 3);
    CHECK_THROWS_AS(order_from_disc(-5), InvalidArgument);
    CHECK_THROWS_AS(order_from_disc(0), InvalidArgument);
    CHECK_THROWS_AS(order_from_disc(5), InvalidArgument);
    CHECK_THROWS_AS(make_order(-12, 1), InvalidArgument);
    CHECK_THROWS_AS(make_order(-4, 0), InvalidArgument);
    CHECK(make_order(-7, 3).disc == -63);
}

TEST_CASE("discriminant enumeration")
{
    const auto ds = discriminants_up_to(20);
    CHECK(ds == std::vector<std::int64_t>{-3, -4, -7, -8, -11, -12, -15, -16, -19, -20});
}

TEST_CASE("reduced forms match the triple-enumeration oracle")
{
    for (std::int64_t D : discriminants_up_to(3000)) {
        const auto forms = reduced_forms(order_from_disc(D));
        std::vector<oracle::Triple> got;
        for (const auto& q : forms) {
            REQUIRE(q.is_reduced());
            REQUIRE(q.is_primitive());
            REQUIRE(q.discriminant() == D);
            got.push_back(triple(q));
        }
        REQUIRE(got == oracle::reduced_forms(D));
    }
}

TEST_CASE("class numbers")
{
    CHECK(class_number(order_from_disc(-23)) == 3);
    CHECK(class_number(order_from_disc(-4)) == 1);
    CHECK(class_number(order_from_disc(-3)) == 1);
    CHECK(class_number(order_from_disc(-163)) == 1);
    CHECK(class_number(order_from_disc(-56)) == 4);
    CHECK(class_number(order_from_disc(-9068)) == 33);
    CHECK(oracle::class_number(-9068) == 33);
}

TEST_CASE("reduction agrees with the textbook oracle and is class invariant")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> coef(-40, 40);
    int tested = 0;
    while (tested < 2000) {
        // Random SL2(Z) images of reduced forms.
        const std::int64_t D = -3 - static_cast<std::int64_t>(rng() % 3000);
        if (!is_negative_discriminant(D))
            continue;
        const auto forms = reduced_forms(order_from_disc(D));
        const QuadForm q = forms[rng() % forms.size()];
        std::int64_t p = coef(rng), r = coef(rng);
        if (gcd(p, r) != 1)
            continue;
        const XGcd e = xgcd(p, r); // p x + r y = 1 -> matrix (p, -y; r, x)
        const std::int64_t s = -e.y, t = e.x;
        const QuadForm moved{q.a * p * p + q.b * p * r + q.c * r * r,
                             2 * q.a * p * s + q.b * (p * t + r * s) + 2 * q.c * r * t,
                             q.a * s * s + q.b * s * t + q.c * t * t};
        REQUIRE(moved.discriminant() == D);
        REQUIRE(reduce(moved) == q);
        REQUIRE(triple(reduce(moved)) == oracle::reduce(triple(moved)));
        ++tested;
    }
}

TEST_CASE("composition examples")
{
    CHECK(compose({2, 1, 3}, {2, 1, 3}) == QuadForm{2, -1, 3});
    CHECK(compose({2, 1, 3}, {2, -1, 3}) == QuadForm{1, 1, 6});
    CHECK(inverse({2, 1, 3}) == QuadForm{2, -1, 3});
    CHECK(principal_form(-23) == QuadForm{1, 1, 6});
    CHECK(principal_form(-20) == QuadForm{1, 0, 5});
    CHECK_THROWS_AS(compose({1, 1, 6}, {1, 0, 5}), InvalidArgument);
}

TEST_CASE("composition agrees with Dirichlet composition")
{
    std::mt19937_64 rng(23);
    for (std::int64_t D : discriminants_up_to(1500)) {
        const auto forms = reduced_forms(order_from_disc(D));
        for (int k = 0; k < 4; ++k) {
            const QuadForm& q1 = forms[rng() % forms.size()];
            const QuadForm& q2 = forms[rng() % forms.size()];
            REQUIRE(triple(compose(q1, q2)) == oracle::compose(triple(q1), triple(q2)));
        }
    }
}

TEST_CASE("group laws")
{
    for (std::int64_t D : discriminants_up_to(800)) {
        const auto forms = reduced_forms(order_from_disc(D));
        const QuadForm e = principal_form(D);
        const std::size_t m = std::min<std::size_t>(forms.size(), 8);
        for (std::size_t i = 0; i < m; ++i) {
            REQUIRE(compose(forms[i], e) == forms[i]);
            REQUIRE(compose(forms[i], inverse(forms[i])) == e);
            for (std::size_t j = 0; j < m; ++j) {
                REQUIRE(compose(forms[i], forms[j]) == compose(forms[j], forms[i]));
                for (std::size_t k = 0; k < m; ++k)
                    REQUIRE(compose(compose(forms[i], forms[j]), forms[k]) ==
                            compose(forms[i], compose(forms[j], forms[k])));
            }
        }
    }
}

TEST_CASE("two-rank counts involutions and obeys the odd-prime bound")
{
    for (std::int64_t D : discriminants_up_to(3000)) {
        const OrderDisc o = order_from_disc(D);
        const auto forms = reduced_forms(o);
        const QuadForm e = principal_form(D);
        std::int64_t inv = 0;
        for (const auto& q : forms)
            inv += compose(q, q) == e;
        const int r = two_rank(o);
        REQUIRE(inv == (std::int64_t{1} << r));
        REQUIRE(r <= oracle::odd_prime_count(D) + 10);
    }
    CHECK(two_rank(order_from_disc(-23)) == 0);
    CHECK(two_rank(order_from_disc(-84)) == 2); // Pic = (Z/2)^2
}

TEST_CASE("class group summary")
{
    const auto s = summarize_class_group(order_from_disc(-23));
    CHECK(s.h == 3);
    CHECK(s.forms.size() == 3);
    CHECK(s.two_rank == 0);
    CHECK(s.odd_primes == 1);
    CHECK(s.two_rank_bound_holds);
}

TEST_CASE("units")
{
    CHECK(unit_count(-3) == 6);
    CHECK(unit_count(-4) == 4);
    CHECK(unit_count(-7) == 2);
    CHECK(unit_count(-12) == 2);
}

TEST_CASE("analytic class number estimate is within 0.4")
{
    for (std::int64_t D : discriminants_up_to(4000))
        REQUIRE(std::fabs(class_number_estimate(D) - static_cast<double>(oracle::class_number(D))) < 0.4);
}
