#include "commands.hpp"

#include "modcm/arith.hpp"
#include "modcm/census.hpp"
#include "modcm/cmscan.hpp"
#include "modcm/errors.hpp"
#include "modcm/io.hpp"
#include "modcm/roots.hpp"
#include "modcm/singular_moduli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

namespace modcm::cli {

using io::json;

void RunConfig::validate() const
{
    if (precision < 64)
        throw InvalidArgument("--precision must be at least 64 bits");
    if (modpoly_ceiling < 1)
        throw InvalidArgument("--nmax must be positive");
    if (dmax < 0 || dmin < 0)
        throw InvalidArgument("--dmax and --dmin must be nonnegative");
    if (samples < 0)
        throw InvalidArgument("--samples must be nonnegative");
    if (tolerance_bits != 0 && tolerance_bits < 16)
        throw InvalidArgument("--tolerance must be at least 16 bits");
    if (d1 < 1 || d2 < 1)
        throw InvalidArgument("--d1 and --d2 must be positive");
    for (double x : xs)
        if (!(x >= 2.0))
            throw InvalidArgument("census thresholds must be >= 2");
}

ModPolyOptions RunConfig::modpoly_options() const
{
    ModPolyOptions o;
    o.ceiling = modpoly_ceiling;
    return o;
}

BiPoly read_curve(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw InvalidArgument("cannot open curve file " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return io::bipoly_from_text(text);
}

namespace {

void emit(std::ostream& out, const json& j)
{
    out << io::dump(j);
}

void check(bool ok, const std::string& what)
{
    if (!ok)
        throw VerifyError(what);
}

Format format_or(const RunConfig& cfg, Format fallback)
{
    return cfg.format_given ? cfg.format : fallback;
}

// Triple enumeration of reduced forms, independent of the library's enumeration.
std::int64_t brute_class_number(std::int64_t D)
{
    std::int64_t count = 0;
    const std::int64_t N = -D;
    for (std::int64_t a = 1; 3 * a * a <= N; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a))
                continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (gcd(gcd(a, b), c) != 1)
                continue;
            ++count;
        }
    return count;
}

bool split_by_euler(std::int64_t D, std::uint64_t p)
{
    if (p == 2)
        return mod_floor(D, 8) == 1;
    const auto a = static_cast<std::uint64_t>(mod_floor(D, static_cast<std::int64_t>(p)));
    if (a == 0)
        return false;
    std::uint64_t r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1)
            r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % p);
        b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % p);
        e >>= 1;
    }
    return r == 1;
}

bool trial_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

mp::Complex random_tau(std::mt19937_64& rng, mp::Precision prec)
{
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.8, 1.5);
    return {mp::Real(re(rng), prec), mp::Real(im(rng), prec)};
}

void verify_classgroup(const ClassGroupSummary& s)
{
    const auto& forms = s.forms;
    check(brute_class_number(s.order.disc) == s.h, "class number disagrees with triple enumeration");
    const QuadForm e = principal_form(s.order.disc);
    std::int64_t involutions = 0;
    for (const auto& q : forms) {
        check(compose(q, e) == q, "principal form is not an identity for " + to_string(q));
        check(compose(q, inverse(q)) == e, "q * q^-1 is not principal for " + to_string(q));
        if (compose(q, q) == e)
            ++involutions;
    }
    check(involutions == (std::int64_t{1} << s.two_rank), "two-rank disagrees with the count of involutions");
    const std::size_t m = std::min<std::size_t>(forms.size(), 12);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            check(compose(forms[i], forms[j]) == compose(forms[j], forms[i]), "composition is not commutative");
            for (std::size_t k = 0; k < m; ++k)
                check(compose(compose(forms[i], forms[j]), forms[k]) ==
                          compose(forms[i], compose(forms[j], forms[k])),
                      "composition is not associative");
        }
    check(std::fabs(class_number_estimate(s.order.disc) - static_cast<double>(s.h)) < 0.4,
          "analytic class number estimate is off by 0.4 or more");
}

void verify_hilbert(const HilbertClassPoly& H, mp::Precision prec)
{
    check(degree(H.coeffs) == class_number(H.order), "degree differs from the class number");
    check(H.coeffs.back() == 1, "polynomial is not monic");
    check(H.max_residual < 0.25, "coefficients are not close to integers");
    const TorsorReport t = check_torsor(H.order, prec);
    check(t.free && t.transitive, "class group action on the roots is not simply transitive");
    check(t.action_law, "torsor action is not compatible with composition");
}

void verify_modpoly(const ModularPoly& phi, const RunConfig& cfg)
{
    const auto psi_n = static_cast<int>(psi(phi.n));
    check(phi.P == phi.P.transposed(), "polynomial is not symmetric");
    check(phi.P.degree_x() == psi_n && phi.P.degree_y() == psi_n, "degrees differ from psi(n)");
    check(phi.P.coeff(psi_n, 0) == 1, "polynomial is not monic in X");
    if (is_prime(static_cast<std::uint64_t>(phi.n)))
        check(kronecker_check(phi), "Kronecker congruence fails");
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < 5; ++k)
        check(functional_equation_residual(phi, random_tau(rng, 64)) < -32.0,
              "|Phi_n(j(tau), j(n tau))| is not below 2^-32");
}

struct SamplePoint {
    mp::Complex u;
    std::vector<mp::Complex> v;
};

// A rational abscissa u0 where deg_y F(u0, y) = d1, with all of its branches.
SamplePoint sample_curve(const BiPoly& F, std::mt19937_64& rng, mp::Precision prec)
{
    const int d1 = F.degree_y();
    ZPoly lead;
    for (int i = 0; i <= F.degree_x(); ++i)
        lead.push_back(F.coeff(i, d1));
    std::uniform_int_distribution<long> num(-200, 200), den(2, 32);
    for (;;) {
        const mpq_class u0(num(rng), den(rng));
        if (eval(lead, u0) == 0)
            continue;
        SamplePoint s{mp::Complex(mpq_class(u0), prec), {}};
        s.v = polynomial_roots(specialize_x(F, s.u), prec);
        return s;
    }
}

void verify_hecke(const PlaneCurve& C, const HeckeImage& img, const RunConfig& cfg)
{
    const auto p2 = static_cast<int>(psi(img.n) * psi(img.n));
    const auto [a, b] = bidegree(img.G);
    check(a == p2 * C.d1 && b == p2 * C.d2, "bidegree differs from (psi(n)^2 d1, psi(n)^2 d2)");
    const BiPoly& phi = modular_poly(img.n, cfg.modpoly_options()).P;
    const double tol = -static_cast<double>(cfg.tolerance_bits ? cfg.tolerance_bits : 48);
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < 3; ++k) {
        const SamplePoint s = sample_curve(C.F, rng, cfg.precision);
        const auto xs = polynomial_roots(specialize_x(phi, s.u), cfg.precision);
        for (const auto& v : s.v) {
            const auto ys = polynomial_roots(specialize_x(phi, v), cfg.precision);
            for (const auto& x : xs)
                for (const auto& y : ys)
                    check(log2_relative_residual(img.G, x, y) < tol,
                          "image polynomial does not vanish at a Hecke translate of a curve point");
        }
    }
}

void verify_certify(const PlaneCurve& C, const ModularityReport& r, const RunConfig& cfg, const NumericOptions& opt)
{
    if (r.verdict == ModularityVerdict::Certified || r.verdict == ModularityVerdict::NoLevelMatched) {
        NumericOptions o = opt;
        o.seed = opt.seed + 1;
        const auto again = contains_in_hecke_image(C, *r.n, ContainmentMethod::Numeric, o, cfg.modpoly_options());
        check(again.verdict == Verdict::Contained, "containment does not reproduce with a fresh seed");
        if (r.m) {
            const BiPoly& phi = modular_poly(*r.m, cfg.modpoly_options()).P;
            check(C.F == phi || C.F == -phi, "curve is not +-Phi_m");
        }
    } else if (r.verdict == ModularityVerdict::NotCertified) {
        for (const auto& a : r.attempts) {
            NumericOptions o = opt;
            o.seed = opt.seed + 1;
            const auto again = contains_in_hecke_image(C, a.n, ContainmentMethod::Numeric, o, cfg.modpoly_options());
            check(again.verdict != Verdict::Contained, "a rejected level is contained with a fresh seed");
        }
    }
}

void verify_cmscan(const PlaneCurve& C, const std::vector<CMPointRecord>& records, double tol)
{
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                        std::int64_t, std::int64_t>>
        seen;
    for (const auto& r : records) {
        const mp::Precision prec = r.x.precision() + 64;
        const auto x = cm_j_invariant(r.D1, r.form1, prec).value;
        const auto y = cm_j_invariant(r.D2, r.form2, prec).value;
        check(log2_relative_residual(C.F, x, y) < tol, "a record does not lie on the curve");
        check(r.log2_res_h1 < tol && r.log2_res_h2 < tol && r.log2_res_f < tol, "a record residual is too large");
        check(r.same_field == (r.D1.fundamental == r.D2.fundamental), "same-field flag is wrong");
        check(seen.insert({r.D1.disc, r.D2.disc, r.form1.a, r.form1.b, r.form1.c, r.form2.a, r.form2.b, r.form2.c})
                  .second,
              "duplicate record");
    }
}

void verify_split_prime(const OrderDisc& D, const std::optional<SplitPrimeCertificate>& cert, int d1, int d2)
{
    const std::int64_t h = brute_class_number(D.disc);
    std::optional<std::int64_t> expect;
    for (std::int64_t p = 2; 2 * d1 * d2 * (p + 1) * (p + 1) < h; ++p)
        if (trial_prime(static_cast<std::uint64_t>(p)) && split_by_euler(D.disc, static_cast<std::uint64_t>(p))) {
            expect = p;
            break;
        }
    check(expect.has_value() == cert.has_value(), "existence of a split prime disagrees with direct search");
    if (cert) {
        check(cert->h == h, "class number disagrees with triple enumeration");
        check(cert->p == *expect, "split prime differs from direct search");
    }
}

void verify_census(const std::vector<CensusRow>& rows)
{
    double xmax = 2.0;
    for (const auto& r : rows)
        if (r.x <= 1e6)
            xmax = std::max(xmax, r.x);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(xmax); ++n)
        if (trial_prime(n))
            primes.push_back(n);
    for (const auto& r : rows) {
        if (r.x > 1e6)
            continue;
        std::uint64_t count = 0;
        for (std::uint64_t p : primes) {
            if (static_cast<double>(p) > r.x)
                break;
            count += split_by_euler(r.order.disc, p);
        }
        check(count == r.pi_split, fmt::format("split count for D = {} at x = {} disagrees with trial division",
                                               r.order.disc, r.x));
    }
}

void verify_siegel(const std::vector<SiegelRow>& rows)
{
    check(std::is_sorted(rows.begin(), rows.end(),
                         [](const SiegelRow& a, const SiegelRow& b) { return a.abs_disc < b.abs_disc; }),
          "rows are not sorted by |D|");
    const std::size_t step = std::max<std::size_t>(1, rows.size() / 64);
    for (std::size_t i = 0; i < rows.size(); i += step)
        check(brute_class_number(-rows[i].abs_disc) == rows[i].h, "class number disagrees with triple enumeration");
}

} // namespace

int cmd_classgroup(std::int64_t D, const RunConfig& cfg, std::ostream& out)
{
    const ClassGroupSummary s = summarize_class_group(order_from_disc(D));
    if (cfg.verify)
        verify_classgroup(s);
    emit(out, io::to_json(s));
    return s.two_rank_bound_holds ? kSuccess : kNegative;
}

int cmd_hilbert(std::int64_t D, const RunConfig& cfg, std::ostream& out)
{
    const HilbertClassPoly H = hilbert_class_poly(order_from_disc(D));
    if (cfg.verify)
        verify_hilbert(H, cfg.precision);
    json j = io::to_json(H);
    j["h"] = degree(H.coeffs);
    j["text"] = to_string(H.coeffs);
    emit(out, j);
    return kSuccess;
}

int cmd_modpoly(int n, const RunConfig& cfg, std::ostream& out)
{
    const ModularPoly& phi = modular_poly(n, cfg.modpoly_options());
    if (cfg.verify)
        verify_modpoly(phi, cfg);
    emit(out, io::bipoly_to_json(phi.P, n));
    return kSuccess;
}

int cmd_hecke_image(const std::string& curve_path, int n, const RunConfig& cfg, std::ostream& out)
{
    const PlaneCurve C = make_curve(read_curve(curve_path));
    const HeckeImage img = hecke_image(C, n, cfg.modpoly_options());
    if (cfg.verify)
        verify_hecke(C, img, cfg);
    const auto [a, b] = bidegree(img.G);
    json j;
    j["n"] = n;
    j["curve_bidegree"] = json::array({C.d1, C.d2});
    j["bidegree"] = json::array({a, b});
    j["shear"] = img.shear;
    j["polynomial"] = io::bipoly_to_json(img.G, n);
    emit(out, j);
    return kSuccess;
}

int cmd_certify(const std::string& curve_path, const RunConfig& cfg, std::ostream& out)
{
    const PlaneCurve C = make_curve(read_curve(curve_path));
    NumericOptions opt;
    opt.precision = cfg.precision;
    if (cfg.tolerance_bits)
        opt.tolerance_bits = cfg.tolerance_bits;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    const ModularityReport r = certify_modular(C, opt, cfg.modpoly_options());
    if (cfg.verify)
        verify_certify(C, r, cfg, opt);
    json j;
    j["bidegree"] = json::array({C.d1, C.d2});
    j.update(io::to_json(r));
    emit(out, j);
    switch (r.verdict) {
    case ModularityVerdict::Certified:
        return kSuccess;
    case ModularityVerdict::NotCertified:
        return kNegative;
    default:
        return kInconclusive;
    }
}

int cmd_cmscan(const std::string& curve_path, const RunConfig& cfg, std::ostream& out)
{
    const PlaneCurve C = make_curve(read_curve(curve_path));
    ScanOptions opt;
    if (cfg.tolerance_bits)
        opt.tolerance_bits = cfg.tolerance_bits;
    const std::int64_t dmax = cfg.dmax ? cfg.dmax : 100;
    const auto records = cm_points_on_curve(C, dmax, opt);
    if (cfg.verify)
        verify_cmscan(C, records, -static_cast<double>(opt.tolerance_bits));
    if (format_or(cfg, Format::Csv) == Format::Csv) {
        io::write_cm_csv(out, records);
    } else {
        json j;
        j["dmax"] = dmax;
        j["records"] = records.size();
        j["field_report"] = io::to_json(cm_field_report(records, C.d1, C.d2));
        json ratios = json::array();
        for (const auto& r : conductor_ratio_census(records))
            ratios.push_back(json{{"ratio", fmt::format("{}/{}", r.num, r.den)}, {"count", r.count}});
        j["conductor_ratios"] = std::move(ratios);
        emit(out, j);
    }
    return kSuccess;
}

int cmd_split_prime(std::int64_t D, const RunConfig& cfg, std::ostream& out)
{
    const OrderDisc order = order_from_disc(D);
    const auto cert = split_prime_for_certificate(order, cfg.d1, cfg.d2);
    if (cfg.verify)
        verify_split_prime(order, cert, cfg.d1, cfg.d2);
    json j;
    if (cert) {
        j = io::to_json(*cert);
    } else {
        j["D"] = order.disc;
        j["d_K"] = order.fundamental;
        j["f"] = order.conductor;
        j["p"] = nullptr;
        j["h"] = class_number(order);
        j["holds"] = false;
    }
    j["d1"] = cfg.d1;
    j["d2"] = cfg.d2;
    emit(out, j);
    return cert ? kSuccess : kNegative;
}

int cmd_census(const RunConfig& cfg, std::ostream& out)
{
    const std::int64_t dmax = cfg.dmax ? cfg.dmax : 500;
    const std::vector<double> xs = cfg.xs.empty() ? std::vector<double>{1e3, 1e4, 1e5} : cfg.xs;
    std::vector<CensusRow> rows;
    for (std::int64_t d : fundamental_discriminants(3, dmax))
        for (double x : xs)
            rows.push_back(grh_bound_check(d, x));
    if (cfg.verify)
        verify_census(rows);
    if (format_or(cfg, Format::Csv) == Format::Csv) {
        io::write_census_csv(out, rows);
    } else {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(json{{"d_K", r.order.fundamental},
                               {"x", io::format_double(r.x)},
                               {"pi_split", r.pi_split},
                               {"li_half", io::format_double(r.li_half)},
                               {"bound_rhs", io::format_double(r.bound_rhs)},
                               {"within_bound", r.within_bound},
                               {"lower_bound", io::format_double(split_count_lower_bound(r.order, r.x))}});
        emit(out, json{{"rows", std::move(arr)}});
    }
    const bool all = std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.within_bound; });
    return all ? kSuccess : kNegative;
}

int cmd_siegel(const RunConfig& cfg, std::ostream& out)
{
    const std::int64_t lo = cfg.dmin ? cfg.dmin : 1000;
    const std::int64_t hi = cfg.dmax ? cfg.dmax : 100000;
    if (lo > hi)
        throw InvalidArgument("--dmin exceeds --dmax");
    const auto rows = siegel_trend(fundamental_discriminants(lo, hi));
    if (cfg.verify)
        verify_siegel(rows);
    if (format_or(cfg, Format::Json) == Format::Csv) {
        io::write_siegel_csv(out, rows);
    } else {
        json j;
        j["dmin"] = lo;
        j["dmax"] = hi;
        j["count"] = rows.size();
        j["median_ratio"] = io::format_double(median_ratio(rows));
        emit(out, j);
    }
    return kSuccess;
}

} // namespace modcm::cli
