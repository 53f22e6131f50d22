#include "modcm/census.hpp"

#include "modcm/arith.hpp"
#include "modcm/errors.hpp"
#include "modcm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

namespace modcm {

namespace {

// Ramanujan: li(x) = gamma + log log x
//   + sqrt(x) sum_{n>=1} (-1)^(n-1) (log x)^n / (n! 2^(n-1)) sum_{k=0}^{floor((n-1)/2)} 1/(2k+1).
long double li_series(long double x)
{
    const long double L = std::log(x);
    long double sum = 0.0L;
    long double term = 1.0L; // (log x)^n / (n! 2^(n-1)) with alternating sign
    long double inner = 0.0L;
    for (int n = 1; n < 400; ++n) {
        term *= (n == 1 ? L : -L / (2.0L * n));
        if ((n - 1) % 2 == 0)
            inner += 1.0L / (n);
        const long double add = term * inner;
        sum += add;
        if (n > 2 * L && std::fabs(add) < 1e-22L * std::fabs(sum))
            break;
    }
    return std::numbers::egamma_v<long double> + std::log(L) + std::sqrt(x) * sum;
}

const std::vector<std::uint32_t>& primes_cached(std::uint32_t limit)
{
    static std::mutex mutex;
    static std::vector<std::uint32_t> primes;
    static std::uint32_t covered = 0;
    std::lock_guard lock(mutex);
    if (limit > covered) {
        const std::uint32_t target = std::max(limit, std::min<std::uint32_t>(covered * 2, kDefaultSieveCeiling));
        primes = primes_up_to(target);
        covered = target;
    }
    return primes;
}

} // namespace

double li(double x)
{
    if (!(x >= 2.0))
        throw InvalidArgument("Li(x) needs x >= 2");
    if (x == 2.0)
        return 0.0;
    static const long double li2 = li_series(2.0L);
    return static_cast<double>(li_series(x) - li2);
}

std::uint64_t split_prime_count(const OrderDisc& D, double x, std::uint32_t ceiling)
{
    if (!(x >= 2.0))
        throw InvalidArgument("split prime count needs x >= 2");
    if (x > static_cast<double>(ceiling))
        throw CeilingError("x exceeds the sieve ceiling " + std::to_string(ceiling));
    const auto limit = static_cast<std::uint32_t>(std::floor(x));
    const auto& primes = primes_cached(limit);
    const auto end = std::upper_bound(primes.begin(), primes.end(), limit);
    // kronecker(D, .) is periodic modulo |D| for a discriminant D.
    const std::int64_t P = -D.disc;
    std::vector<std::int32_t> table(static_cast<std::size_t>(P));
    for (std::int64_t r = 0; r < P; ++r)
        table[static_cast<std::size_t>(r)] = kronecker(D.disc, r);
    return kernels::count_split(std::span(primes.data(), static_cast<std::size_t>(end - primes.begin())), table);
}

CensusRow grh_bound_check(std::int64_t d_K, double x)
{
    if (d_K >= 0 || !is_fundamental_discriminant(d_K))
        throw InvalidArgument("not a negative fundamental discriminant: " + std::to_string(d_K));
    CensusRow row;
    row.order = make_order(d_K, 1);
    row.x = x;
    row.pi_split = split_prime_count(row.order, x);
    row.li_half = li(x) / 2.0;
    row.bound_rhs = std::sqrt(x) * (std::log(static_cast<double>(-d_K)) + 2.0 * std::log(x)) / 6.0;
    row.within_bound = std::fabs(static_cast<double>(row.pi_split) - row.li_half) <= row.bound_rhs;
    return row;
}

double split_count_lower_bound(const OrderDisc& D, double x)
{
    if (!(x >= 2.0))
        throw InvalidArgument("lower bound needs x >= 2");
    const double lx = std::log(x);
    const double ldk = std::log(static_cast<double>(-D.fundamental));
    const double lf = std::log(static_cast<double>(D.conductor));
    const double inner = li(x) * lx / x - lx / (3.0 * std::sqrt(x)) * (ldk + 2.0 * lx) -
                         2.0 * lx * lf / (x * std::numbers::ln2);
    return x / (2.0 * lx) * inner;
}

std::vector<SiegelRow> siegel_trend(const std::vector<std::int64_t>& discriminants)
{
    if (discriminants.empty())
        throw InvalidArgument("Siegel trend needs at least one discriminant");
    std::vector<SiegelRow> rows;
    for (std::int64_t D : discriminants) {
        const OrderDisc order = order_from_disc(D);
        SiegelRow r;
        r.abs_disc = -D;
        r.h = class_number(order);
        r.ratio = std::log(static_cast<double>(r.h)) / (0.5 * std::log(static_cast<double>(r.abs_disc)));
        rows.push_back(r);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SiegelRow& a, const SiegelRow& b) { return a.abs_disc < b.abs_disc; });
    return rows;
}

double median_ratio(const std::vector<SiegelRow>& rows)
{
    if (rows.empty())
        throw InvalidArgument("median of an empty table");
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto& r : rows)
        v.push_back(r.ratio);
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t m = std::max<std::int64_t>(lo, 3); m <= hi; ++m)
        if (is_fundamental_discriminant(-m))
            out.push_back(-m);
    return out;
}

} // namespace modcm
