#pragma once

// CM points on a plane curve: exact detection over a box of discriminants,
// CM-field comparison, conductor ratios, and split primes for the Hecke
// containment inequality.

#include "modcm/hecke.hpp"
#include "modcm/mp.hpp"
#include "modcm/quadorders.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace modcm {

inline constexpr std::int64_t kDefaultScanCeiling = 3000;

struct CMPointRecord {
    OrderDisc D1;
    OrderDisc D2;
    QuadForm form1;
    QuadForm form2;
    mp::Complex x;
    mp::Complex y;
    bool same_field = false;
    /// Degree of gcd(H_D1(x), Res_y(F(x, y), H_D2(y))) over Q.
    int gcd_degree = 0;
    /// log2 relative residuals of H_D1(x), H_D2(y), F(x, y).
    double log2_res_h1 = 0.0;
    double log2_res_h2 = 0.0;
    double log2_res_f = 0.0;
};

struct ScanOptions {
    std::int64_t ceiling = kDefaultScanCeiling;
    /// Numeric pairing of roots accepts a relative residual below 2^-tolerance_bits.
    int tolerance_bits = 64;
};

/// Every point (x, y) with F(x, y) = 0, H_D1(x) = 0, H_D2(y) = 0 for
/// discriminants 3 <= |D1|, |D2| <= Dmax, ordered by (|D1|, |D2|) and then by
/// the reduced forms indexing x and y. Throws CeilingError above the ceiling.
std::vector<CMPointRecord> cm_points_on_curve(const PlaneCurve& C, std::int64_t Dmax, const ScanOptions& options = {});

struct FieldPairCount {
    std::int64_t dK1 = 0;
    std::int64_t dK2 = 0;
    std::int64_t count = 0;
};

/// For a record with different CM fields: h(D_i) against 2 d_i 2^(omega_odd(D_i) + 10).
struct MismatchBound {
    std::size_t record = 0;
    std::int64_t h1 = 0, bound1 = 0;
    std::int64_t h2 = 0, bound2 = 0;
};

struct FieldReport {
    std::vector<FieldPairCount> pairs;
    std::int64_t matched = 0;
    std::int64_t mismatched = 0;
    std::vector<MismatchBound> bounds;
};

FieldReport cm_field_report(const std::vector<CMPointRecord>& records, int d1 = 1, int d2 = 1);

struct RatioCount {
    std::int64_t num = 1;
    std::int64_t den = 1;
    std::int64_t count = 0;
};

/// Reduced fractions f1/f2 over records with equal CM fields, ascending by value.
std::vector<RatioCount> conductor_ratio_census(const std::vector<CMPointRecord>& records);

struct SplitPrimeCertificate {
    OrderDisc D;
    std::int64_t p = 0;
    std::int64_t h = 0;
    /// 2 d1 d2 (p + 1)^2
    std::int64_t lhs = 0;
    bool holds = false;
};

/// Smallest p with kronecker(D, p) = 1 and 2 d1 d2 (p + 1)^2 < h(D), if any.
std::optional<SplitPrimeCertificate> split_prime_for_certificate(const OrderDisc& D, std::int64_t d1, std::int64_t d2);

} // namespace modcm
