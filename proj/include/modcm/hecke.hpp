#pragma once

// Plane curves F(x1, x2) = 0 in C^2, their images under the Hecke
// correspondences T_n x T_n, containment tests, and the modularity certifier.

#include "modcm/modpoly.hpp"
#include "modcm/mp.hpp"
#include "modcm/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modcm {

/// A curve F(x1, x2) = 0. In F, coeff(i, j) multiplies x1^i x2^j.
struct PlaneCurve {
    BiPoly F;
    /// deg_{x2} F: degree of the first projection.
    int d1 = 0;
    /// deg_{x1} F: degree of the second projection.
    int d2 = 0;
    /// True when irreducibility over Q was proved (see prove_irreducible).
    bool irreducible = false;
};

/// Normalizes F to its primitive part and fills in the degrees and the
/// irreducibility flag. Throws InvalidArgument for the zero polynomial.
PlaneCurve make_curve(const BiPoly& F);

/// (deg_{x2} F, deg_{x1} F). Throws InvalidArgument for the zero polynomial.
std::pair<int, int> bidegree(const BiPoly& F);

/// Divisor classes on P^1 x P^1 as projection degrees.
struct Bidegree {
    std::int64_t first = 0;
    std::int64_t second = 0;
};

/// (a, b) . (c, d) = ad + bc.
std::int64_t intersection_number(Bidegree u, Bidegree v);

/// Sufficient test for irreducibility over Q: F is primitive, has no factor
/// in one variable alone, and some specialization of one variable that keeps
/// the degree is irreducible, shown by incompatible factor-degree patterns
/// modulo several primes. False means "not proved", not "reducible".
bool prove_irreducible(const BiPoly& F);

struct HeckeImage {
    int n = 1;
    /// G(x, y) = prod over u ~ x, v ~ y (cyclic n-isogenies) of F(u, v),
    /// primitive part.
    BiPoly G;
    /// Shear k used for x1 -> x1 + k x2 (always 0: Phi_n is monic in each
    /// variable, so the leading coefficients of the resultants never vanish).
    int shear = 0;
};

/// Exact computation of G = Res_u(Phi_n(u, x), Res_v(Phi_n(v, y), F(u, v)))
/// by evaluation on an integer grid and interpolation.
HeckeImage hecke_image(const PlaneCurve& C, int n, const ModPolyOptions& mp_options = {});

enum class Verdict { Contained, NotContained, Inconclusive };
enum class ContainmentMethod { Exact, Numeric, Auto };

std::string to_string(Verdict v);
std::string to_string(ContainmentMethod m);

struct NumericOptions {
    mp::Precision precision = 256;
    /// A sample passes when some root pair has relative residual < 2^-tolerance_bits.
    int tolerance_bits = 48;
    /// A sample fails decisively when every root pair exceeds 2^(20 - tolerance_bits).
    int margin_bits = 20;
    /// Requested samples; the count actually used is at least
    /// 2 d1 d2 psi(n)^2 + 1 for a "contained" verdict to be possible.
    std::int64_t samples = 0;
    std::uint64_t seed = 1;
    /// Auto picks the exact method when the interpolation grid side
    /// psi(n)^2 max(d1, d2) + 1 is at most this.
    int exact_grid_limit = 41;
};

struct ContainmentCertificate {
    int n = 1;
    ContainmentMethod method = ContainmentMethod::Exact;
    Verdict verdict = Verdict::Inconclusive;
    /// 2 d1 d2 psi(n)^2.
    std::int64_t intersection_bound = 0;
    std::int64_t samples_planned = 0;
    std::int64_t samples_checked = 0;
    std::int64_t samples_passed = 0;
    /// log2 of the tolerance on relative residuals.
    double log2_tolerance = 0.0;
    /// Largest (worst) best-pair residual among passing samples, log2.
    double log2_worst_pass = -1e300;
    /// Best-pair residual at the first non-passing sample, log2.
    double log2_first_failure = -1e300;
    /// Index of the first non-passing sample, or -1.
    std::int64_t first_failure_index = -1;
    int shear = 0;
    std::string note;
};

ContainmentCertificate contains_in_hecke_image(const PlaneCurve& C, int n, ContainmentMethod method,
                                               const NumericOptions& options = {},
                                               const ModPolyOptions& mp_options = {});

/// 2 d1 d2 (p + 1)^2 < h.
bool certificate_inequality(std::int64_t d1, std::int64_t d2, std::int64_t p, std::int64_t h);

/// The m with psi(m) = d1 = d2 and F = +-Phi_m, searched up to the ceiling.
std::optional<int> identify_modular_level(const PlaneCurve& C, const ModPolyOptions& mp_options = {});

/// Square-free n in (1, nmax] whose prime factors are all >= max(5, d1).
std::vector<int> qualifying_levels(int d1, int nmax);

enum class ModularityVerdict { Certified, NotCertified, Inconclusive, NoLevelMatched };
std::string to_string(ModularityVerdict v);

struct ModularityReport {
    ModularityVerdict verdict = ModularityVerdict::NotCertified;
    std::optional<int> n;
    std::optional<int> m;
    std::vector<ContainmentCertificate> attempts;
    bool irreducible = false;
    std::string note;
};

ModularityReport certify_modular(const PlaneCurve& C, const NumericOptions& options = {},
                                 const ModPolyOptions& mp_options = {});

} // namespace modcm
