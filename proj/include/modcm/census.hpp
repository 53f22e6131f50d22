#pragma once

// Split-prime counts for imaginary quadratic orders against the logarithmic
// integral, the GRH-conditional Chebotarev bound, and class number growth.

#include "modcm/quadorders.hpp"

#include <cstdint>
#include <vector>

namespace modcm {

/// Default largest x accepted by split_prime_count.
inline constexpr std::uint32_t kDefaultSieveCeiling = 100'000'000;

/// Li(x) = integral_2^x dt / log t, from Ramanujan's series for li(x) minus
/// li(2). Throws InvalidArgument for x < 2.
double li(double x);

/// #{p <= x prime : kronecker(D, p) = 1}. Throws CeilingError above the ceiling.
std::uint64_t split_prime_count(const OrderDisc& D, double x, std::uint32_t ceiling = kDefaultSieveCeiling);

struct CensusRow {
    OrderDisc order;
    double x = 0.0;
    std::uint64_t pi_split = 0;
    /// Li(x) / 2
    double li_half = 0.0;
    /// (1/6) sqrt(x) (log |d_K| + 2 log x)
    double bound_rhs = 0.0;
    /// |pi_split - li_half| <= bound_rhs
    bool within_bound = false;
};

/// The split-prime count of the maximal order of discriminant d_K against
/// Li(x)/2. Throws InvalidArgument if d_K is not a negative fundamental discriminant.
CensusRow grh_bound_check(std::int64_t d_K, double x);

/// (x / 2 log x) (Li(x) log x / x - (log x / 3 sqrt x)(log |d_K| + 2 log x)
///                - 2 log x log f / (x log 2)).
double split_count_lower_bound(const OrderDisc& D, double x);

struct SiegelRow {
    std::int64_t abs_disc = 0;
    std::int64_t h = 0;
    /// log h / log sqrt|D|
    double ratio = 0.0;
};

/// One row per discriminant, sorted by |D|.
std::vector<SiegelRow> siegel_trend(const std::vector<std::int64_t>& discriminants);

/// Median of the ratio column. Throws InvalidArgument on an empty table.
double median_ratio(const std::vector<SiegelRow>& rows);

/// Negative fundamental discriminants with lo <= |d| <= hi, |d| ascending.
std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi);

} // namespace modcm
