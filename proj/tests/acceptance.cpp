// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "oracles.hpp"

#include "commands.hpp"
#include "modcm/arith.hpp"
#include "modcm/census.hpp"
#include "modcm/cmscan.hpp"
#include "modcm/io.hpp"
#include "modcm/singular_moduli.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace modcm;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

fs::path scratch_dir()
{
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("modcm-acceptance-" + std::to_string(getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_curve(const std::string& name, const BiPoly& F)
{
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << io::dump(io::bipoly_to_json(F, 0));
    return p.string();
}

BiPoly line(long a, long b, long c)
{
    BiPoly F(1, 1);
    F.at(1, 0) = a;
    F.at(0, 1) = b;
    F.at(0, 0) = c;
    F.normalize();
    return F;
}

// 1. Class numbers against triple enumeration and the analytic estimate.
Outcome class_groups()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::int64_t count = 0, bad_h = 0, bad_est = 0;
    double worst = 0.0;
    for (std::int64_t D : discriminants_up_to(10000)) {
        const std::int64_t h = class_number(order_from_disc(D));
        bad_h += h != oracle::class_number(D);
        const double err = std::fabs(class_number_estimate(D) - static_cast<double>(h));
        worst = std::max(worst, err);
        bad_est += err >= 0.4;
        ++count;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {bad_h == 0 && bad_est == 0 && secs < 60.0,
            fmt::format("{} discriminants, {} class number mismatches, {} estimates off by >= 0.4 (worst {:.2e}), {:.1f} s",
                        count, bad_h, bad_est, worst, secs)};
}

// 2. Q composed with its opposite is principal.
Outcome opposite_forms()
{
    std::int64_t forms = 0, failures = 0;
    for (std::int64_t D : discriminants_up_to(5000)) {
        const QuadForm e = principal_form(D);
        for (const auto& q : reduced_forms(order_from_disc(D))) {
            failures += compose(q, QuadForm{q.a, -q.b, q.c}) != e;
            ++forms;
        }
    }
    return {failures == 0, fmt::format("{} reduced forms, {} failures", forms, failures)};
}

// 3. Two-rank bound.
Outcome two_rank_bound()
{
    std::int64_t count = 0, failures = 0;
    int max_rank = 0;
    for (std::int64_t D : discriminants_up_to(10000)) {
        const int r = two_rank(order_from_disc(D));
        max_rank = std::max(max_rank, r);
        failures += r > oracle::odd_prime_count(D) + 10;
        ++count;
    }
    return {failures == 0, fmt::format("{} discriminants, {} failures, largest 2-rank {}", count, failures, max_rank)};
}

// 4. Torsor action on the roots of H_D.
Outcome torsor()
{
    std::int64_t count = 0, failures = 0;
    double worst = -1e300;
    for (std::int64_t D : discriminants_up_to(2000)) {
        const auto r = check_torsor(order_from_disc(D), 256);
        failures += !(r.free && r.transitive && r.action_law);
        worst = std::max(worst, r.log2_worst_match);
        ++count;
    }
    return {failures == 0,
            fmt::format("{} orders, {} failures, worst match 2^{:.1f}", count, failures, worst)};
}

// 5. Hilbert class polynomials.
Outcome hilbert()
{
    std::int64_t count = 0, failures = 0;
    double worst = 0.0;
    for (std::int64_t D : discriminants_up_to(2000)) {
        const auto H = hilbert_class_poly(order_from_disc(D));
        worst = std::max(worst, H.max_residual);
        failures += !(H.max_residual < 0.25 && degree(H.coeffs) == oracle::class_number(D) && H.coeffs.back() == 1);
        ++count;
    }
    const bool known = hilbert_class_poly(order_from_disc(-3)).coeffs == ZPoly{0, 1} &&
                       hilbert_class_poly(order_from_disc(-4)).coeffs == ZPoly{-1728, 1} &&
                       hilbert_class_poly(order_from_disc(-15)).coeffs == ZPoly{-121287375, 191025, 1};
    return {failures == 0 && known,
            fmt::format("{} polynomials, {} failures, worst rounding residual {:.2e}, H_-3/H_-4/H_-15 {}", count,
                        failures, worst, known ? "match" : "differ")};
}

// 6. Modular polynomials.
Outcome modular_polynomials()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.8, 1.5);
    std::vector<std::string> problems;
    double worst = -1e300;
    for (int n : {2, 3, 5, 7, 11}) {
        const ModularPoly& phi = compute_modular_poly(n);
        const int d = static_cast<int>(psi(n));
        if (phi.P != phi.P.transposed())
            problems.push_back(fmt::format("Phi_{} not symmetric", n));
        if (phi.P.degree_x() != d || phi.P.degree_y() != d)
            problems.push_back(fmt::format("Phi_{} degree", n));
        if (!(phi.max_residual < 0.25))
            problems.push_back(fmt::format("Phi_{} not integral", n));
        if (!kronecker_check(phi))
            problems.push_back(fmt::format("Phi_{} Kronecker", n));
        for (int k = 0; k < 20; ++k) {
            const mp::Complex tau(mp::Real(re(rng), 64), mp::Real(im(rng), 64));
            const double r = functional_equation_residual(phi, tau);
            worst = std::max(worst, r);
            if (!(r < -32.0))
                problems.push_back(fmt::format("Phi_{} residual 2^{:.1f}", n, r));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {problems.empty() && secs < 600.0,
            fmt::format("n in {{2,3,5,7,11}}, {} problems{}, worst |Phi_n(j(tau), j(n tau))| = 2^{:.1f}, {:.1f} s",
                        problems.size(), problems.empty() ? "" : " (" + problems.front() + ")", worst, secs)};
}

// 7. Intersection numbers.
Outcome intersections()
{
    std::mt19937_64 rng(7);
    int failures = 0;
    for (int k = 0; k < 100; ++k) {
        const std::int64_t d1 = 1 + static_cast<std::int64_t>(rng() % 6);
        const std::int64_t d2 = 1 + static_cast<std::int64_t>(rng() % 6);
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 60);
        const std::int64_t p = psi(n);
        // n prod_{p | n} (1 + 1/p), recomputed here
        std::int64_t q = n, m = n;
        for (std::int64_t f = 2; f * f <= m; ++f)
            if (m % f == 0) {
                q = q / f * (f + 1);
                while (m % f == 0)
                    m /= f;
            }
        if (m > 1)
            q = q / m * (m + 1);
        failures += p != q;
        failures += intersection_number({d1, d2}, {p, p}) != q * (d1 + d2);
        failures += intersection_number({d1, d2}, {q * q * d1, q * q * d2}) != 2 * d1 * d2 * q * q;
    }
    return {failures == 0, fmt::format("100 random (d1, d2, n), {} mismatches", failures)};
}

// 8. Degree law for Hecke images of lines and conics.
Outcome degree_law()
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> coef(-9, 9);
    auto nonzero = [&] {
        long v = 0;
        while (v == 0)
            v = coef(rng);
        return v;
    };
    int failures = 0;
    std::string shapes;
    for (int k = 0; k < 10; ++k) {
        BiPoly F;
        if (k % 2 == 0) {
            F = line(nonzero(), nonzero(), coef(rng));
        } else {
            F = BiPoly(2, 2);
            F.at(2, 0) = nonzero();
            F.at(0, 2) = nonzero();
            F.at(1, 1) = coef(rng);
            F.at(1, 0) = coef(rng);
            F.at(0, 1) = coef(rng);
            F.at(0, 0) = coef(rng);
        }
        const int n = 2 + k / 5;
        const PlaneCurve C = make_curve(F);
        const HeckeImage img = hecke_image(C, n);
        const auto p2 = static_cast<int>(psi(n) * psi(n));
        const auto [a, b] = bidegree(img.G);
        failures += a != p2 * C.d1 || b != p2 * C.d2 || img.G.content() != 1;
        shapes += fmt::format("{}({},{})", shapes.empty() ? "" : " ", a, b);
    }
    return {failures == 0, fmt::format("10 curves, {} failures, bidegrees {}", failures, shapes)};
}

// 9. Containment.
Outcome containment()
{
    std::vector<std::string> parts;
    bool ok = true;
    const PlaneCurve diag = make_curve(line(1, -1, 0));
    for (int n : {2, 3, 5}) {
        const auto c = contains_in_hecke_image(diag, n, ContainmentMethod::Exact);
        ok = ok && c.verdict == Verdict::Contained && c.method == ContainmentMethod::Exact;
        parts.push_back(fmt::format("diagonal n={} {}", n, to_string(c.verdict)));
    }
    const auto p = contains_in_hecke_image(make_curve(modular_poly(2).P), 3, ContainmentMethod::Numeric);
    ok = ok && p.verdict == Verdict::Contained && p.samples_checked >= 60 && p.samples_passed == p.samples_checked;
    parts.push_back(fmt::format("Phi_2 in T_3: {}/{} samples, worst 2^{:.0f}", p.samples_passed, p.samples_checked,
                                p.log2_worst_pass));
    const auto l = contains_in_hecke_image(make_curve(line(1, 1, -1)), 2, ContainmentMethod::Numeric);
    const double margin = l.log2_first_failure - l.log2_tolerance;
    ok = ok && l.verdict == Verdict::NotContained && l.first_failure_index == 0 && margin > std::log2(1e6);
    parts.push_back(fmt::format("x+y-1 in T_2: {} at sample {}, margin 2^{:.1f}", to_string(l.verdict),
                                l.first_failure_index, margin));
    std::string detail;
    for (const auto& s : parts)
        detail += (detail.empty() ? "" : "; ") + s;
    return {ok, detail};
}

// 10. Certifier end to end through the CLI command.
Outcome certifier()
{
    const auto t0 = std::chrono::steady_clock::now();
    cli::RunConfig cfg;
    std::vector<std::string> parts;
    bool ok = true;
    for (int m : {1, 2, 3, 5}) {
        const auto path = write_curve(fmt::format("phi{}.json", m), modular_poly(m).P);
        std::ostringstream out;
        const int code = cli::cmd_certify(path, cfg, out);
        const auto j = io::json::parse(out.str());
        const bool good = code == cli::kSuccess && j["m"] == m;
        ok = ok && good;
        parts.push_back(fmt::format("Phi_{} -> m={} (n={})", m, j["m"].dump(), j["n"].dump()));
    }
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> coef(-9, 9);
    int rejected = 0, drawn = 0;
    while (drawn < 5) {
        const int d1 = 1 + static_cast<int>(rng() % 3), d2 = 1 + static_cast<int>(rng() % 3);
        BiPoly F(d2, d1);
        for (int i = 0; i <= d2; ++i)
            for (int j = 0; j <= d1; ++j)
                F.at(i, j) = coef(rng);
        F.normalize();
        if (F.is_zero() || bidegree(F) != std::pair{d1, d2} || !make_curve(F).irreducible)
            continue;
        ++drawn;
        const auto path = write_curve(fmt::format("random{}.json", drawn), F);
        std::ostringstream out;
        const int code = cli::cmd_certify(path, cfg, out);
        const auto j = io::json::parse(out.str());
        const bool good = code == cli::kNegative && j["verdict"] == "not-certified";
        rejected += good;
        ok = ok && good;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 900.0;
    std::string detail;
    for (const auto& s : parts)
        detail += s + "; ";
    return {ok, detail + fmt::format("{}/5 random curves not certified, {:.1f} s", rejected, secs)};
}

// 11. CM scan examples.
Outcome cm_scan()
{
    const auto r2 = cm_points_on_curve(make_curve(modular_poly(2).P), 100);
    const bool found = std::any_of(r2.begin(), r2.end(), [](const CMPointRecord& r) {
        return r.D1.disc == -4 && r.D2.disc == -16 && r.same_field &&
               mp::log2_abs(r.x - mp::Complex(1728L, r.x.precision())) < -64 &&
               mp::log2_abs(r.y - mp::Complex(287496L, r.y.precision())) < -64;
    });
    const auto rl = cm_points_on_curve(make_curve(line(1, 1, -1728)), 100);
    const bool flagged = std::any_of(rl.begin(), rl.end(), [](const CMPointRecord& r) {
        return r.D1.disc == -3 && r.D2.disc == -4 && !r.same_field && mp::log2_abs(r.x) < -64 &&
               mp::log2_abs(r.y - mp::Complex(1728L, r.y.precision())) < -64;
    });
    const auto rep = cm_field_report(rl);
    return {found && flagged && rep.mismatched >= 1,
            fmt::format("Phi_2: {} records, (1728, 287496) {}; x+y-1728: {} records, (0, 1728) {}, {} mismatched",
                        r2.size(), found ? "found" : "missing", rl.size(), flagged ? "flagged" : "missing",
                        rep.mismatched)};
}

// 12. Split-prime census.
Outcome census()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::int64_t rows = 0, outside = 0, lower_fail = 0;
    for (std::int64_t d : fundamental_discriminants(3, 500))
        for (double x : {1e3, 1e4, 1e5}) {
            const auto r = grh_bound_check(d, x);
            outside += !r.within_bound;
            lower_fail += split_count_lower_bound(r.order, x) > static_cast<double>(r.pi_split);
            ++rows;
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {outside == 0 && lower_fail == 0 && secs < 300.0,
            fmt::format("{} rows, {} outside the bound, {} lower-bound violations, {:.1f} s", rows, outside,
                        lower_fail, secs)};
}

// 13. Siegel trend sanity band.
Outcome siegel()
{
    const auto rows = siegel_trend(fundamental_discriminants(1000, 100000));
    const double m = median_ratio(rows);
    return {m >= 0.7 && m <= 1.3, fmt::format("{} discriminants, median {:.4f}", rows.size(), m)};
}

// 14. Byte-identical CLI output across two runs.
struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args)
{
    const std::string cmd = std::string(MODCM_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Outcome determinism()
{
    const auto phi2 = write_curve("det_phi2.json", modular_poly(2).P);
    const auto l = write_curve("det_line.json", line(1, 1, -1));
    const std::vector<std::string> commands = {
        "classgroup -9068",
        "hilbert -71",
        "modpoly 7",
        "hecke-image " + l + " 3",
        "certify " + phi2 + " --seed 42 --samples 700",
        "certify " + l + " --seed 42",
        "cmscan " + phi2 + " --dmax 120",
        "cmscan " + phi2 + " --dmax 60 --format json",
        "split-prime -9068 --d1 1 --d2 1",
        "census --dmax 100 --x 1000,100000",
        "siegel --dmin 1000 --dmax 20000 --format csv",
        "siegel --dmin 1000 --dmax 20000",
    };
    int differ = 0;
    std::string which;
    for (const auto& c : commands) {
        const Run a = run_cli(c), b = run_cli(c);
        if (a.code != b.code || a.out != b.out || a.out.empty()) {
            ++differ;
            which += " [" + c + "]";
        }
    }
    return {differ == 0, fmt::format("{} commands run twice, {} differ{}", commands.size(), differ, which)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"class-group correctness", class_groups},
        {"Q composed with its opposite is principal", opposite_forms},
        {"2-rank bound", two_rank_bound},
        {"class group torsor on roots of H_D", torsor},
        {"Hilbert class polynomials", hilbert},
        {"modular polynomials", modular_polynomials},
        {"intersection arithmetic", intersections},
        {"Hecke degree law", degree_law},
        {"containment", containment},
        {"modularity certifier", certifier},
        {"CM scan", cm_scan},
        {"split-prime census", census},
        {"class number growth band", siegel},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::error_code ec;
    fs::remove_all(scratch_dir(), ec);
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
