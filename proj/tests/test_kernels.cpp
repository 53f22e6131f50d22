#include "modcm/arith.hpp"
#include "modcm/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace modcm;

namespace {

std::vector<std::int32_t> kronecker_table(std::int64_t D)
{
    std::vector<std::int32_t> t(static_cast<std::size_t>(-D));
    for (std::int64_t r = 0; r < -D; ++r)
        t[static_cast<std::size_t>(r)] = kronecker(D, r);
    return t;
}

std::vector<std::int32_t> random_table(std::mt19937_64& rng, std::size_t size)
{
    std::vector<std::int32_t> t(size);
    for (auto& v : t)
        v = static_cast<std::int32_t>(rng() % 3) - 1;
    return t;
}

} // namespace

TEST_CASE("scalar character sums by hand")
{
    const std::vector<std::int32_t> chi{0, 1, 0, -1}; // chi_{-4}
    const auto s = kernels::scalar::character_sums(chi, 1);
    CHECK(s.reciprocal == doctest::Approx(1.0 - 1.0 / 3.0));
    CHECK(s.mean_partial == doctest::Approx(0.5));
    const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
    CHECK(kernels::scalar::count_split(primes, chi) == 2);
}

TEST_CASE("AVX2 kernels agree with the scalar reference")
{
    if (!kernels::avx2::supported()) {
        MESSAGE("AVX2 not available; skipping equivalence");
        return;
    }
    std::mt19937_64 rng(31);
    const auto primes = primes_up_to(200000);
    for (std::size_t size : {1u, 3u, 4u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 100u, 1001u, 4096u}) {
        const auto t = random_table(rng, size);
        for (std::uint32_t periods : {1u, 2u, 5u, 16u}) {
            const auto a = kernels::scalar::character_sums(t, periods);
            const auto b = kernels::avx2::character_sums(t, periods);
            REQUIRE(b.reciprocal == doctest::Approx(a.reciprocal).epsilon(1e-12));
            REQUIRE(b.mean_partial == doctest::Approx(a.mean_partial).epsilon(1e-12));
        }
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5}, std::size_t{8}, std::size_t{13},
                              primes.size()}) {
            const std::span<const std::uint32_t> ps(primes.data(), n);
            REQUIRE(kernels::avx2::count_split(ps, t) == kernels::scalar::count_split(ps, t));
        }
    }
    for (std::int64_t D : {-3L, -4L, -23L, -163L, -9068L, -99995L}) {
        const auto t = kronecker_table(D);
        REQUIRE(kernels::avx2::count_split(primes, t) == kernels::scalar::count_split(primes, t));
        const auto a = kernels::scalar::character_sums(t, 16);
        const auto b = kernels::avx2::character_sums(t, 16);
        REQUIRE(b.reciprocal == doctest::Approx(a.reciprocal).epsilon(1e-12));
    }
}

TEST_CASE("dispatch")
{
    const auto primes = primes_up_to(10000);
    const auto t = kronecker_table(-47);
    kernels::force_isa(kernels::Isa::Scalar);
    CHECK(kernels::active_isa() == kernels::Isa::Scalar);
    const auto s = kernels::count_split(primes, t);
    kernels::force_isa(kernels::Isa::Avx2);
    CHECK(kernels::count_split(primes, t) == s);
    if (kernels::avx2::supported())
        CHECK(kernels::active_isa() == kernels::Isa::Avx2);
    CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
}
