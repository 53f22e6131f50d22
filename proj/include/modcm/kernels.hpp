#pragma once

// Data-parallel kernels over periodic character tables. Each kernel has a
// scalar reference implementation and an AVX2 variant; the public entry points
// dispatch at runtime on CPU support. A character table has one entry per
// residue r mod P holding chi(r) in {-1, 0, 1}.

#include <cstdint>
#include <span>
#include <string_view>

namespace modcm::kernels {

/// Partial sums of a periodic character, over n = 1..periods*P.
struct CharacterSums {
    /// sum chi(n) / n
    double reciprocal = 0.0;
    /// (1/P) * sum_{r=1}^{P} sum_{k<=r} chi(k): mean of the running sum over one period.
    double mean_partial = 0.0;
};

/// Which implementation the dispatcher uses.
enum class Isa { Scalar, Avx2 };

Isa active_isa();
std::string_view isa_name(Isa isa);
/// Force an implementation (Avx2 falls back to Scalar if unsupported). For tests.
void force_isa(Isa isa);

CharacterSums character_sums(std::span<const std::int32_t> table, std::uint32_t periods);
/// Number of entries p in `primes` with table[p mod P] == 1.
std::uint64_t count_split(std::span<const std::uint32_t> primes, std::span<const std::int32_t> table);

namespace scalar {
CharacterSums character_sums(std::span<const std::int32_t> table, std::uint32_t periods);
std::uint64_t count_split(std::span<const std::uint32_t> primes, std::span<const std::int32_t> table);
} // namespace scalar

namespace avx2 {
bool supported();
CharacterSums character_sums(std::span<const std::int32_t> table, std::uint32_t periods);
std::uint64_t count_split(std::span<const std::uint32_t> primes, std::span<const std::int32_t> table);
} // namespace avx2

} // namespace modcm::kernels
