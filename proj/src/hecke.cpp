#include "modcm/hecke.hpp"

#include "modcm/arith.hpp"
#include "modcm/errors.hpp"
#include "modcm/modp.hpp"
#include "modcm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace modcm {

std::pair<int, int> bidegree(const BiPoly& F)
{
    if (F.is_zero())
        throw InvalidArgument("bidegree of the zero polynomial");
    return {F.degree_y(), F.degree_x()};
}

std::int64_t intersection_number(Bidegree u, Bidegree v)
{
    if (u.first < 0 || u.second < 0 || v.first < 0 || v.second < 0)
        throw InvalidArgument("bidegrees must be nonnegative");
    return u.first * v.second + u.second * v.first;
}

namespace {

// Subset sums (as a 0/1 table over 0..deg) of a multiset of factor degrees.
std::vector<char> subset_sums(const std::vector<int>& degrees, int deg)
{
    std::vector<char> s(static_cast<std::size_t>(deg + 1), 0);
    s[0] = 1;
    for (int d : degrees)
        for (int k = deg; k >= d; --k)
            if (s[static_cast<std::size_t>(k - d)])
                s[static_cast<std::size_t>(k)] = 1;
    return s;
}

// Irreducibility over Q of a univariate integer polynomial from factor-degree
// patterns modulo primes not dividing the leading coefficient.
bool univariate_irreducible(const ZPoly& f)
{
    const int deg = degree(f);
    if (deg <= 0)
        return false;
    if (content(f) != 1)
        return false;
    if (deg == 1)
        return true;
    std::vector<char> possible(static_cast<std::size_t>(deg + 1), 1);
    int patterns = 0;
    for (std::uint32_t p : primes_up_to(20000)) {
        if (p < 100)
            continue;
        modp::Field field(p);
        if (field.reduce(f.back()) == 0)
            continue;
        const auto degrees = field.factor_degrees(field.reduce(f));
        if (degrees.empty())
            continue;
        const auto sums = subset_sums(degrees, deg);
        bool open = false;
        for (int k = 1; k < deg; ++k) {
            possible[static_cast<std::size_t>(k)] &= sums[static_cast<std::size_t>(k)];
            open = open || possible[static_cast<std::size_t>(k)];
        }
        if (!open)
            return true;
        if (++patterns >= 40)
            break;
    }
    return false;
}

bool no_one_variable_factor(const BiPoly& F)
{
    // A factor in x2 alone divides every row (coefficient of x1^i); a factor in
    // x1 alone divides every column.
    ZPoly g;
    for (int i = 0; i <= F.degree_x(); ++i)
        g = gcd(g, F.row(i));
    if (degree(g) > 0)
        return false;
    g.clear();
    for (int j = 0; j <= F.degree_y(); ++j)
        g = gcd(g, F.column(j));
    return degree(g) <= 0;
}

// Irreducible if some x2 = c keeps deg_{x1} and gives an irreducible polynomial.
bool specialization_irreducible(const BiPoly& F)
{
    const int dx = F.degree_x();
    if (dx <= 0)
        return false;
    const ZPoly lead = F.row(dx);
    for (long c = 0; c <= 40; ++c) {
        for (long s : {c, -c}) {
            if (c == 0 && s != 0)
                continue;
            const mpz_class y0 = s;
            if (eval(lead, y0) == 0)
                continue;
            ZPoly f = F.specialize_y(y0);
            if (degree(f) != dx)
                continue;
            if (univariate_irreducible(primitive_part(f)))
                return true;
        }
    }
    return false;
}

} // namespace

bool prove_irreducible(const BiPoly& F)
{
    if (F.is_zero() || F.content() != 1)
        return false;
    if (F.degree_x() <= 0 && F.degree_y() <= 0)
        return false;
    if (!no_one_variable_factor(F))
        return false;
    // With no one-variable factor, every factor has positive degree in x1 (and
    // in x2), so an irreducible degree-preserving specialization settles it.
    if (F.degree_x() > 0 && F.degree_y() > 0)
        return specialization_irreducible(F) || specialization_irreducible(F.transposed());
    // One-variable polynomial.
    return univariate_irreducible(F.degree_x() > 0 ? F.column(0) : F.row(0));
}

PlaneCurve make_curve(const BiPoly& F)
{
    if (F.is_zero())
        throw InvalidArgument("curve equation is the zero polynomial");
    PlaneCurve c;
    c.F = F.primitive_part();
    // Sign normalization: leading coefficient in lex order (x1 major) positive.
    const int dx = c.F.degree_x();
    for (int j = c.F.degree_y(); j >= 0; --j)
        if (c.F.coeff(dx, j) != 0) {
            if (c.F.coeff(dx, j) < 0)
                c.F = -c.F;
            break;
        }
    auto [d1, d2] = bidegree(c.F);
    c.d1 = d1;
    c.d2 = d2;
    c.irreducible = prove_irreducible(c.F);
    return c;
}

HeckeImage hecke_image(const PlaneCurve& C, int n, const ModPolyOptions& mp_options)
{
    if (C.d1 <= 0 || C.d2 <= 0)
        throw InvalidArgument("Hecke image needs both projection degrees positive");
    const ModularPoly& phi = modular_poly(n, mp_options);
    const int s = static_cast<int>(psi(n));
    const int ny = s * s * C.d1; // deg_y G
    const int nx = s * s * C.d2; // deg_x G
    const int nu = s * C.d2;     // deg_u S

    // values[x0][y0] = G(x0, y0).
    std::vector<std::vector<mpz_class>> values(static_cast<std::size_t>(nx + 1),
                                               std::vector<mpz_class>(static_cast<std::size_t>(ny + 1)));
    std::vector<ZPoly> phi_at_x(static_cast<std::size_t>(nx + 1));
    for (int x0 = 0; x0 <= nx; ++x0)
        phi_at_x[static_cast<std::size_t>(x0)] = phi.P.specialize_y(mpz_class(x0));
    std::vector<ZPoly> f_at_u(static_cast<std::size_t>(nu + 1));
    for (int u0 = 0; u0 <= nu; ++u0)
        f_at_u[static_cast<std::size_t>(u0)] = C.F.specialize_x(mpz_class(u0));

    for (int y0 = 0; y0 <= ny; ++y0) {
        // S(u) = Res_v(Phi_n(v, y0), F(u, v)) = prod_{Phi_n(v, y0) = 0} F(u, v).
        const ZPoly phi_y = phi.P.specialize_y(mpz_class(y0));
        std::vector<mpz_class> s_values(static_cast<std::size_t>(nu + 1));
        for (int u0 = 0; u0 <= nu; ++u0)
            s_values[static_cast<std::size_t>(u0)] = resultant(phi_y, f_at_u[static_cast<std::size_t>(u0)]);
        const ZPoly S = interpolate_consecutive(s_values);
        for (int x0 = 0; x0 <= nx; ++x0)
            values[static_cast<std::size_t>(x0)][static_cast<std::size_t>(y0)] =
                S.empty() ? mpz_class(0) : resultant(phi_at_x[static_cast<std::size_t>(x0)], S);
    }
    HeckeImage out;
    out.n = n;
    out.G = interpolate_grid(values);
    if (out.G.is_zero())
        throw DegenerateError("Hecke image resultant vanished identically; apply a shear x1 -> x1 + k x2");
    out.G = out.G.primitive_part();
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Contained:
        return "contained";
    case Verdict::NotContained:
        return "not-contained";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string to_string(ContainmentMethod m)
{
    switch (m) {
    case ContainmentMethod::Exact:
        return "exact-divisibility";
    case ContainmentMethod::Numeric:
        return "numeric-root-pairing";
    case ContainmentMethod::Auto:
        return "auto";
    }
    return "?";
}

namespace {

ContainmentCertificate exact_containment(const PlaneCurve& C, int n, const ModPolyOptions& mp_options)
{
    ContainmentCertificate cert;
    cert.n = n;
    cert.method = ContainmentMethod::Exact;
    const HeckeImage image = hecke_image(C, n, mp_options);
    cert.shear = image.shear;
    BiPoly quotient;
    const bool divides = divide_exact(image.G, C.F, quotient);
    cert.verdict = divides ? Verdict::Contained : Verdict::NotContained;
    cert.note = "Hecke image bidegree (" + std::to_string(image.G.degree_y()) + ", " +
                std::to_string(image.G.degree_x()) + ")";
    return cert;
}

struct SampleAbscissa {
    mpz_class num;
    mpz_class den;
};

// Deterministic rational abscissae p/q with q >= 2 (never a rational CM
// value, which would be an integer) where F(x0, .) keeps degree d1 and is
// squarefree.
std::vector<SampleAbscissa> sample_abscissae(const BiPoly& F, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(2, 64);
    std::set<std::pair<long, long>> seen;
    std::vector<SampleAbscissa> out;
    const int d2 = F.degree_x();
    while (out.size() < count) {
        const long p = num(rng), q = den(rng);
        if (gcd(p, q) != 1 || !seen.insert({p, q}).second)
            continue;
        // q^d2 F(p/q, Y) as an integer polynomial in Y.
        ZPoly f(static_cast<std::size_t>(F.degree_y() + 1));
        mpz_class pp = 1;
        for (int i = 0; i <= d2; ++i) {
            mpz_class qq;
            mpz_ui_pow_ui(qq.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d2 - i));
            const mpz_class w = pp * qq;
            for (int j = 0; j <= F.degree_y(); ++j)
                f[static_cast<std::size_t>(j)] += F.coeff(i, j) * w;
            pp *= p;
        }
        trim(f);
        if (degree(f) != F.degree_y())
            continue;
        ZPoly df;
        for (std::size_t k = 1; k < f.size(); ++k)
            df.push_back(f[k] * static_cast<long>(k));
        if (degree(gcd(f, df)) > 0)
            continue;
        out.push_back({mpz_class(p), mpz_class(q)});
    }
    return out;
}

ContainmentCertificate numeric_containment(const PlaneCurve& C, int n, const NumericOptions& options,
                                           const ModPolyOptions& mp_options)
{
    ContainmentCertificate cert;
    cert.n = n;
    cert.method = ContainmentMethod::Numeric;
    const std::int64_t s = psi(n);
    cert.intersection_bound = 2 * static_cast<std::int64_t>(C.d1) * C.d2 * s * s;
    const std::int64_t needed = cert.intersection_bound + 1;
    cert.samples_planned = options.samples > 0 ? options.samples : needed;
    cert.log2_tolerance = -static_cast<double>(options.tolerance_bits);
    const double fail_level = cert.log2_tolerance + options.margin_bits;

    const ModularPoly& phi = modular_poly(n, mp_options);
    const mp::Precision prec = options.precision;
    const std::size_t abscissae = static_cast<std::size_t>((cert.samples_planned + C.d1 - 1) / C.d1);
    bool inconclusive = false;
    for (const auto& x : sample_abscissae(C.F, abscissae, options.seed)) {
        const mp::Complex x0(mpq_class(x.num, x.den), prec);
        const auto branches = polynomial_roots(specialize_x(C.F, x0), prec);
        const auto us = polynomial_roots(specialize_y(phi.P, x0), prec);
        for (const auto& y0 : branches) {
            if (cert.samples_checked >= cert.samples_planned)
                break;
            const auto vs = polynomial_roots(specialize_y(phi.P, y0), prec);
            double best = 1e300;
            for (const auto& u : us) {
                for (const auto& v : vs) {
                    best = std::min(best, log2_relative_residual(C.F, u, v));
                    if (best < cert.log2_tolerance)
                        break;
                }
                if (best < cert.log2_tolerance)
                    break;
            }
            const std::int64_t index = cert.samples_checked++;
            if (best < cert.log2_tolerance) {
                ++cert.samples_passed;
                cert.log2_worst_pass = std::max(cert.log2_worst_pass, best);
                continue;
            }
            if (cert.first_failure_index < 0) {
                cert.first_failure_index = index;
                cert.log2_first_failure = best;
            }
            if (best > fail_level) {
                cert.verdict = Verdict::NotContained;
                cert.note = "no root pair lies on the curve at sample " + std::to_string(index);
                return cert;
            }
            inconclusive = true;
        }
    }
    if (inconclusive) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = "a sample residual fell between the tolerance and the failure margin";
    } else if (cert.samples_passed < needed) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = "all samples passed but fewer than 2 d1 d2 psi(n)^2 + 1 were taken";
    } else {
        cert.verdict = Verdict::Contained;
        cert.note = "every sample has a root pair on the curve";
    }
    return cert;
}

} // namespace

ContainmentCertificate contains_in_hecke_image(const PlaneCurve& C, int n, ContainmentMethod method,
                                               const NumericOptions& options, const ModPolyOptions& mp_options)
{
    if (C.d1 <= 0 || C.d2 <= 0)
        throw InvalidArgument("containment test needs both projection degrees positive");
    if (n < 1)
        throw InvalidArgument("Hecke level must be >= 1");
    if (n > mp_options.ceiling)
        throw CeilingError("Hecke level " + std::to_string(n) + " exceeds the modular polynomial ceiling " +
                           std::to_string(mp_options.ceiling));
    if (method == ContainmentMethod::Auto) {
        const std::int64_t s = psi(n);
        const std::int64_t side = s * s * std::max(C.d1, C.d2) + 1;
        method = side <= options.exact_grid_limit ? ContainmentMethod::Exact : ContainmentMethod::Numeric;
    }
    ContainmentCertificate cert = method == ContainmentMethod::Exact
                                      ? exact_containment(C, n, mp_options)
                                      : numeric_containment(C, n, options, mp_options);
    const std::int64_t s = psi(n);
    cert.intersection_bound = 2 * static_cast<std::int64_t>(C.d1) * C.d2 * s * s;
    return cert;
}

bool certificate_inequality(std::int64_t d1, std::int64_t d2, std::int64_t p, std::int64_t h)
{
    if (d1 <= 0 || d2 <= 0 || p <= 0 || h <= 0)
        throw InvalidArgument("certificate inequality needs positive arguments");
    const __int128 lhs = static_cast<__int128>(2) * d1 * d2 * (p + 1) * (p + 1);
    return lhs < h;
}

std::optional<int> identify_modular_level(const PlaneCurve& C, const ModPolyOptions& mp_options)
{
    if (C.d1 != C.d2 || C.d1 <= 0)
        return std::nullopt;
    for (int m = 1; m <= std::min(C.d1, mp_options.ceiling); ++m) {
        if (psi(m) != C.d1)
            continue;
        const BiPoly& phi = modular_poly(m, mp_options).P;
        if (C.F == phi || C.F == -phi)
            return m;
    }
    return std::nullopt;
}

std::vector<int> qualifying_levels(int d1, int nmax)
{
    std::vector<int> out;
    const int least = std::max(5, d1);
    for (int n = 2; n <= nmax; ++n) {
        if (!is_squarefree(n))
            continue;
        bool ok = true;
        for (auto [p, e] : factorize(n))
            ok = ok && p >= least;
        if (ok)
            out.push_back(n);
    }
    return out;
}

std::string to_string(ModularityVerdict v)
{
    switch (v) {
    case ModularityVerdict::Certified:
        return "certified";
    case ModularityVerdict::NotCertified:
        return "not-certified";
    case ModularityVerdict::Inconclusive:
        return "inconclusive";
    case ModularityVerdict::NoLevelMatched:
        return "hypothesis-satisfied-no-level-matched";
    }
    return "?";
}

ModularityReport certify_modular(const PlaneCurve& C, const NumericOptions& options, const ModPolyOptions& mp_options)
{
    ModularityReport report;
    report.irreducible = C.irreducible;
    if (C.d1 <= 0 || C.d2 <= 0) {
        report.verdict = ModularityVerdict::NotCertified;
        report.note = "a projection is constant";
        return report;
    }
    if (!C.irreducible) {
        report.verdict = ModularityVerdict::Inconclusive;
        report.note = "irreducibility over Q could not be proved";
        return report;
    }
    const auto levels = qualifying_levels(C.d1, mp_options.ceiling);
    if (levels.empty()) {
        report.verdict = ModularityVerdict::NotCertified;
        report.note = "no qualifying n within the ceiling";
        return report;
    }
    bool inconclusive = false;
    for (int n : levels) {
        report.attempts.push_back(contains_in_hecke_image(C, n, ContainmentMethod::Auto, options, mp_options));
        const Verdict v = report.attempts.back().verdict;
        if (v == Verdict::Inconclusive)
            inconclusive = true;
        if (v != Verdict::Contained)
            continue;
        report.n = n;
        report.m = identify_modular_level(C, mp_options);
        if (report.m) {
            report.verdict = ModularityVerdict::Certified;
            report.note = "containment at a qualifying level and an exact match with Phi_m";
        } else {
            report.verdict = ModularityVerdict::NoLevelMatched;
            report.note = "containment holds but no Phi_m within the ceiling matches the curve";
        }
        return report;
    }
    report.verdict = inconclusive ? ModularityVerdict::Inconclusive : ModularityVerdict::NotCertified;
    report.note = inconclusive ? "some containment tests were inconclusive"
                               : "every qualifying n within the ceiling fails containment";
    return report;
}

} // namespace modcm
