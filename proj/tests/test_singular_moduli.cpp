#include "oracles.hpp"

#include "modcm/errors.hpp"
#include "modcm/singular_moduli.hpp"

#include <doctest.h>

#include <random>

using namespace modcm;

namespace {

double rel_err(const mp::Complex& a, const mp::Complex& b)
{
    return mp::log2_abs(a - b) - std::max(0.0, mp::log2_abs(b));
}

mp::Complex tau(double re, double im, mp::Precision prec)
{
    return {mp::Real(re, prec), mp::Real(im, prec)};
}

} // namespace

TEST_CASE("q-expansion oracle has the classical coefficients")
{
    const auto c = oracle::j_coefficients(4);
    CHECK(c[0] == 1);
    CHECK(c[1] == 744);
    CHECK(c[2] == 196884);
    CHECK(c[3] == 21493760);
}

TEST_CASE("j at the elliptic points")
{
    const auto ji = j_eval(tau(0.0, 1.0, 256), 256);
    CHECK(rel_err(ji, mp::Complex(1728L, 256)) < -240);
    mp::Complex rho(-mp::Real(0.5, 256), mp::sqrt(mp::Real(3L, 256)) / mp::Real(2L, 256));
    CHECK(mp::log2_abs(j_eval(rho, 256)) < -200);
}

TEST_CASE("j agrees with the q-expansion oracle")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.8, 3.0);
    for (int k = 0; k < 40; ++k) {
        const auto t = tau(re(rng), im(rng), 256);
        REQUIRE(rel_err(j_eval(t, 256), oracle::j_qexp(t, 320)) < -240);
    }
}

TEST_CASE("j is invariant under SL2(Z)")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.9, 2.0);
    for (int k = 0; k < 20; ++k) {
        const auto t = tau(re(rng), im(rng), 256);
        const auto v = j_eval(t, 256);
        // tau -> -1/(tau + 3)
        mp::Complex s = t + mp::Complex(3L, 256);
        s = mp::Complex(-1L, 256) / s;
        REQUIRE(rel_err(j_eval(s, 256), v) < -230);
    }
    CHECK_THROWS_AS(j_eval(tau(0.0, -1.0, 64), 64), InvalidArgument);
}

TEST_CASE("Hilbert class polynomials of small discriminants")
{
    CHECK(hilbert_class_poly(order_from_disc(-3)).coeffs == ZPoly{0, 1});
    CHECK(hilbert_class_poly(order_from_disc(-4)).coeffs == ZPoly{-1728, 1});
    CHECK(hilbert_class_poly(order_from_disc(-7)).coeffs == ZPoly{3375, 1});
    CHECK(hilbert_class_poly(order_from_disc(-15)).coeffs == ZPoly{-121287375, 191025, 1});
    CHECK(hilbert_class_poly(order_from_disc(-23)).coeffs ==
          ZPoly{mpz_class("12771880859375"), -5151296875, 3491750, 1});
    // j(2i) = 287496
    CHECK(hilbert_class_poly(order_from_disc(-16)).coeffs == ZPoly{-287496, 1});
}

TEST_CASE("Hilbert class polynomials are monic of degree h with small residuals")
{
    for (std::int64_t D : discriminants_up_to(700)) {
        const auto H = hilbert_class_poly(order_from_disc(D));
        REQUIRE(degree(H.coeffs) == oracle::class_number(D));
        REQUIRE(H.coeffs.back() == 1);
        REQUIRE(H.max_residual < 0.25);
    }
}

TEST_CASE("CM values are roots of H_D")
{
    const OrderDisc o = order_from_disc(-56);
    const auto H = hilbert_class_poly(o);
    for (const auto& x : cm_j_invariants(o, 256)) {
        mp::Complex acc(0L, 256);
        for (std::size_t k = H.coeffs.size(); k-- > 0;)
            acc = acc * x.value + mp::Complex(H.coeffs[k], 256);
        // relative to the size of the largest term
        CHECK(mp::log2_abs(acc) - 4 * mp::log2_abs(x.value) < -180);
    }
}

TEST_CASE("torsor action")
{
    for (std::int64_t D : discriminants_up_to(300)) {
        const auto r = check_torsor(order_from_disc(D));
        REQUIRE(r.free);
        REQUIRE(r.transitive);
        REQUIRE(r.action_law);
    }
    // The principal class acts trivially.
    const OrderDisc o = order_from_disc(-23);
    const auto x = cm_j_invariant(o, QuadForm{2, 1, 3}, 128);
    CHECK(rel_err(torsor_act(principal_form(-23), x).value, x.value) < -100);
    CHECK(torsor_act(QuadForm{2, 1, 3}, x).form == compose(QuadForm{2, -1, 3}, QuadForm{2, 1, 3}));
    CHECK_THROWS_AS(torsor_act(QuadForm{1, 0, 5}, x), InvalidArgument);
}

TEST_CASE("precision contract")
{
    const OrderDisc o = order_from_disc(-1999);
    CHECK(hilbert_initial_precision(o) > 32);
    HilbertOptions tiny;
    tiny.ceiling = 64;
    CHECK_THROWS(hilbert_class_poly(o, tiny));
}
