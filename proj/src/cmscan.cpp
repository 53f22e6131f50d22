#include "modcm/cmscan.hpp"

#include "modcm/arith.hpp"
#include "modcm/errors.hpp"
#include "modcm/modp.hpp"
#include "modcm/roots.hpp"
#include "modcm/singular_moduli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace modcm {

namespace {

double log2_relative_residual(const ZPoly& H, const mp::Complex& x)
{
    CPoly c;
    for (const auto& a : H)
        c.emplace_back(a, x.precision());
    const double lx = std::max(0.0, mp::log2_abs(x));
    double top = -1e300;
    for (std::size_t k = 0; k < H.size(); ++k)
        if (H[k] != 0)
            top = std::max(top, mp::Real(H[k], 64).log2_abs() + static_cast<double>(k) * lx);
    const mp::Complex v = horner(c, x);
    if (v.re.is_zero() && v.im.is_zero())
        return -1e300;
    return mp::log2_abs(v) - top;
}

// Res_y(H(y), F(x, y)) = prod_{H(g) = 0} F(x, g) mod p, as a polynomial in x.
modp::Poly resultant_in_x_mod_p(const modp::Field& field, const BiPoly& F, const modp::Poly& H)
{
    const int deg = F.degree_x() * (static_cast<int>(H.size()) - 1);
    std::vector<std::uint64_t> values;
    for (int x0 = 0; x0 <= deg; ++x0)
        values.push_back(field.resultant(H, field.reduce(F.specialize_x(mpz_class(x0)))));
    return field.interpolate_consecutive(values);
}

ZPoly resultant_in_x(const BiPoly& F, const ZPoly& H)
{
    const int deg = F.degree_x() * degree(H);
    std::vector<mpz_class> values;
    for (int x0 = 0; x0 <= deg; ++x0)
        values.push_back(resultant(H, F.specialize_x(mpz_class(x0))));
    return interpolate_consecutive(values);
}

struct DiscData {
    OrderDisc order;
    ZPoly H;
    modp::Poly H_mod;
    modp::Poly R_mod;
    std::optional<ZPoly> R;
    std::vector<CMJInvariant> roots;
};

} // namespace

std::vector<CMPointRecord> cm_points_on_curve(const PlaneCurve& C, std::int64_t Dmax, const ScanOptions& options)
{
    if (C.d1 <= 0 || C.d2 <= 0)
        throw InvalidArgument("CM scan needs both projection degrees positive");
    if (Dmax < 3)
        throw InvalidArgument("Dmax must be at least 3, got " + std::to_string(Dmax));
    if (Dmax > options.ceiling)
        throw CeilingError("Dmax " + std::to_string(Dmax) + " exceeds the scan ceiling " +
                           std::to_string(options.ceiling));

    const modp::Field field(modp::large_prime(0));
    const mp::Precision prec =
        256 + static_cast<mp::Precision>(std::ceil(std::numbers::pi * std::sqrt(static_cast<double>(Dmax)) /
                                                   std::numbers::ln2));
    const double log2_tol = -static_cast<double>(options.tolerance_bits);

    std::vector<DiscData> discs;
    for (std::int64_t D : discriminants_up_to(Dmax)) {
        DiscData d;
        d.order = order_from_disc(D);
        d.H = hilbert_class_poly(d.order).coeffs;
        d.H_mod = field.reduce(d.H);
        discs.push_back(std::move(d));
    }
    for (auto& d : discs)
        d.R_mod = resultant_in_x_mod_p(field, C.F, d.H_mod);

    auto roots_of = [&](DiscData& d) -> const std::vector<CMJInvariant>& {
        if (d.roots.empty())
            d.roots = cm_j_invariants(d.order, prec);
        return d.roots;
    };

    std::vector<CMPointRecord> out;
    for (auto& d1 : discs) {
        for (auto& d2 : discs) {
            // H_D1 is monic, so a constant gcd mod p forces a constant gcd over Q.
            if (field.gcd(d1.H_mod, d2.R_mod).size() <= 1)
                continue;
            if (!d2.R)
                d2.R = resultant_in_x(C.F, d2.H);
            ZPoly quotient;
            ZPoly g = divide_exact(*d2.R, d1.H, quotient) ? d1.H : gcd(d1.H, *d2.R);
            if (degree(g) <= 0)
                continue;
            const bool whole = degree(g) == degree(d1.H);
            for (const auto& xr : roots_of(d1)) {
                if (!whole && log2_relative_residual(g, xr.value) > log2_tol)
                    continue;
                bool paired = false;
                for (const auto& yr : roots_of(d2)) {
                    const double rf = modcm::log2_relative_residual(C.F, xr.value, yr.value);
                    if (rf > log2_tol)
                        continue;
                    paired = true;
                    CMPointRecord rec{d1.order,
                                      d2.order,
                                      xr.form,
                                      yr.form,
                                      xr.value,
                                      yr.value,
                                      d1.order.fundamental == d2.order.fundamental,
                                      degree(g),
                                      log2_relative_residual(d1.H, xr.value),
                                      log2_relative_residual(d2.H, yr.value),
                                      rf};
                    out.push_back(std::move(rec));
                }
                if (!paired)
                    throw PrecisionError("CM scan: no partner found numerically for a root of H_" +
                                         std::to_string(d1.order.disc) + " against H_" +
                                         std::to_string(d2.order.disc));
            }
        }
    }
    return out;
}

FieldReport cm_field_report(const std::vector<CMPointRecord>& records, int d1, int d2)
{
    FieldReport report;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        ++counts[{r.D1.fundamental, r.D2.fundamental}];
        if (r.same_field) {
            ++report.matched;
            continue;
        }
        ++report.mismatched;
        MismatchBound b;
        b.record = i;
        b.h1 = class_number(r.D1);
        b.h2 = class_number(r.D2);
        b.bound1 = 2 * static_cast<std::int64_t>(d1) << (odd_prime_divisor_count(r.D1.disc) + 10);
        b.bound2 = 2 * static_cast<std::int64_t>(d2) << (odd_prime_divisor_count(r.D2.disc) + 10);
        report.bounds.push_back(b);
    }
    // |d_K| ascending.
    for (const auto& [key, count] : counts)
        report.pairs.push_back({key.first, key.second, count});
    std::sort(report.pairs.begin(), report.pairs.end(), [](const FieldPairCount& a, const FieldPairCount& b) {
        return std::pair(-a.dK1, -a.dK2) < std::pair(-b.dK1, -b.dK2);
    });
    return report;
}

std::vector<RatioCount> conductor_ratio_census(const std::vector<CMPointRecord>& records)
{
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
    for (const auto& r : records) {
        if (!r.same_field)
            continue;
        const std::int64_t g = gcd(r.D1.conductor, r.D2.conductor);
        ++counts[{r.D1.conductor / g, r.D2.conductor / g}];
    }
    std::vector<RatioCount> out;
    for (const auto& [key, count] : counts)
        out.push_back({key.first, key.second, count});
    std::sort(out.begin(), out.end(), [](const RatioCount& a, const RatioCount& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    });
    return out;
}

std::optional<SplitPrimeCertificate> split_prime_for_certificate(const OrderDisc& D, std::int64_t d1, std::int64_t d2)
{
    if (d1 <= 0 || d2 <= 0)
        throw InvalidArgument("split prime search needs positive projection degrees");
    const std::int64_t h = class_number(D);
    for (std::int64_t p = 2; certificate_inequality(d1, d2, p, h); ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p)) || kronecker(D.disc, p) != 1)
            continue;
        return SplitPrimeCertificate{D, p, h, 2 * d1 * d2 * (p + 1) * (p + 1), true};
    }
    return std::nullopt;
}

} // namespace modcm
