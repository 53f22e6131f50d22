// Compiled with -mavx2 -mfma; only entered when the CPU reports AVX2.

#include "modcm/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <limits>

namespace modcm::kernels {

namespace detail {
double mean_partial_sum(std::span<const std::int32_t> table);
}

namespace avx2 {

bool supported()
{
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

CharacterSums character_sums(std::span<const std::int32_t> table, std::uint32_t periods)
{
    const std::size_t P = table.size();
    const std::int32_t* chi = table.data();
    const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    const __m256d four = _mm256_set1_pd(4.0);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    double tail = 0.0;
    for (std::uint32_t k = 0; k < periods; ++k) {
        const double base = static_cast<double>(k) * static_cast<double>(P);
        std::size_t r = (k == 0 ? 1 : 0);
        __m256d n = _mm256_add_pd(_mm256_set1_pd(base + static_cast<double>(r)), lane);
        for (; r + 8 <= P; r += 8) {
            const __m256d c0 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(chi + r)));
            const __m256d c1 = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(chi + r + 4)));
            const __m256d n1 = _mm256_add_pd(n, four);
            acc0 = _mm256_add_pd(acc0, _mm256_div_pd(c0, n));
            acc1 = _mm256_add_pd(acc1, _mm256_div_pd(c1, n1));
            n = _mm256_add_pd(n1, four);
        }
        for (; r < P; ++r)
            if (chi[r] != 0)
                tail += chi[r] / (base + static_cast<double>(r));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    CharacterSums out;
    out.reciprocal = ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3])) + tail;
    out.mean_partial = detail::mean_partial_sum(table);
    return out;
}

std::uint64_t count_split(std::span<const std::uint32_t> primes, std::span<const std::int32_t> table)
{
    const std::size_t n = primes.size();
    const std::uint64_t P = table.size();
    const bool fits = P <= static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()) &&
                      (n == 0 || *std::max_element(primes.begin(), primes.end()) <=
                                     static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max()));
    if (!fits)
        return scalar::count_split(primes, table);

    const __m256d period = _mm256_set1_pd(static_cast<double>(P));
    const __m256d inv_period = _mm256_set1_pd(1.0 / static_cast<double>(P));
    const __m256d zero = _mm256_setzero_pd();
    const __m128i one = _mm_set1_epi32(1);
    std::uint64_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i p32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(primes.data() + i));
        const __m256d p = _mm256_cvtepi32_pd(p32);
        // r = p - floor(p / P) * P, corrected by one period either way.
        const __m256d q = _mm256_floor_pd(_mm256_mul_pd(p, inv_period));
        __m256d r = _mm256_fnmadd_pd(q, period, p);
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), period));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, period, _CMP_GE_OQ), period));
        const __m128i idx = _mm256_cvtpd_epi32(r);
        const __m128i vals = _mm_i32gather_epi32(table.data(), idx, 4);
        const int mask = _mm_movemask_ps(_mm_castsi128_ps(_mm_cmpeq_epi32(vals, one)));
        count += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    }
    count += scalar::count_split(primes.subspan(i), table);
    return count;
}

} // namespace avx2
} // namespace modcm::kernels
