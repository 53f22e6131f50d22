#include "modcm/kernels.hpp"

namespace modcm::kernels {

namespace detail {

double mean_partial_sum(std::span<const std::int32_t> table)
{
    const std::size_t P = table.size();
    double running = 0.0, total = 0.0;
    for (std::size_t r = 1; r <= P; ++r) {
        running += table[r % P];
        total += running;
    }
    return total / static_cast<double>(P);
}

} // namespace detail

namespace scalar {

CharacterSums character_sums(std::span<const std::int32_t> table, std::uint32_t periods)
{
    const std::size_t P = table.size();
    CharacterSums out;
    double acc = 0.0;
    for (std::uint32_t k = 0; k < periods; ++k) {
        const double base = static_cast<double>(k) * static_cast<double>(P);
        for (std::size_t r = (k == 0 ? 1 : 0); r < P; ++r) {
            const std::int32_t chi = table[r];
            if (chi != 0)
                acc += chi / (base + static_cast<double>(r));
        }
    }
    out.reciprocal = acc;
    out.mean_partial = detail::mean_partial_sum(table);
    return out;
}

std::uint64_t count_split(std::span<const std::uint32_t> primes, std::span<const std::int32_t> table)
{
    const std::uint64_t P = table.size();
    std::uint64_t count = 0;
    for (std::uint32_t p : primes)
        count += table[p % P] == 1 ? 1 : 0;
    return count;
}

} // namespace scalar
} // namespace modcm::kernels
