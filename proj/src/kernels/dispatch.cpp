#include "modcm/kernels.hpp"

#include <atomic>

namespace modcm::kernels {

namespace {

#if defined(MODCM_HAVE_AVX2)
constexpr bool kCompiledAvx2 = true;
#else
constexpr bool kCompiledAvx2 = false;
#endif

Isa detect()
{
    if constexpr (kCompiledAvx2) {
        if (avx2::supported())
            return Isa::Avx2;
    }
    return Isa::Scalar;
}

std::atomic<Isa>& current()
{
    static std::atomic<Isa> isa{detect()};
    return isa;
}

} // namespace

#if !defined(MODCM_HAVE_AVX2)
namespace avx2 {
bool supported()
{
    return false;
}
CharacterSums character_sums(std::span<const std::int32_t> table, std::uint32_t periods)
{
    return scalar::character_sums(table, periods);
}
std::uint64_t count_split(std::span<const std::uint32_t> primes, std::span<const std::int32_t> table)
{
    return scalar::count_split(primes, table);
}
} // namespace avx2
#endif

Isa active_isa()
{
    return current().load(std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa)
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void force_isa(Isa isa)
{
    if (isa == Isa::Avx2 && !(kCompiledAvx2 && avx2::supported()))
        isa = Isa::Scalar;
    current().store(isa, std::memory_order_relaxed);
}

CharacterSums character_sums(std::span<const std::int32_t> table, std::uint32_t periods)
{
    if (table.empty())
        return {};
    return active_isa() == Isa::Avx2 ? avx2::character_sums(table, periods)
                                     : scalar::character_sums(table, periods);
}

std::uint64_t count_split(std::span<const std::uint32_t> primes, std::span<const std::int32_t> table)
{
    if (table.empty())
        return 0;
    return active_isa() == Isa::Avx2 ? avx2::count_split(primes, table) : scalar::count_split(primes, table);
}

} // namespace modcm::kernels
