#include "modcm/modpoly.hpp"

#include "modcm/arith.hpp"
#include "modcm/errors.hpp"
#include "modcm/modp.hpp"
#include "modcm/roots.hpp"
#include "modcm/singular_moduli.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace modcm {

std::int64_t psi(std::int64_t n)
{
    if (n <= 0)
        throw InvalidArgument("psi(n) needs n >= 1, got " + std::to_string(n));
    std::int64_t r = n;
    for (auto [p, e] : factorize(n))
        r = r / p * (p + 1);
    return r;
}

std::vector<CycCoset> cyclic_cosets(std::int64_t n)
{
    if (n <= 0)
        throw InvalidArgument("cyclic_cosets(n) needs n >= 1, got " + std::to_string(n));
    std::vector<CycCoset> out;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        const std::int64_t a = n / d;
        for (std::int64_t b = 0; b < d; ++b)
            if (gcd(gcd(a, b), d) == 1)
                out.push_back({a, b, d});
    }
    return out;
}

mp::Precision modpoly_initial_precision(int n)
{
    return 256 + 64 * static_cast<mp::Precision>(psi(n));
}

namespace {

// Base points tau_k = i (1 + k/4) on the imaginary axis.
mp::Complex base_point(int k, mp::Precision prec)
{
    mp::Real im(static_cast<long>(4 + k), prec);
    im /= mp::Real(4L, prec);
    return {mp::Real(0L, prec), im};
}

// One interpolation attempt at a fixed precision.
ModularPoly attempt(int n, const std::vector<CycCoset>& cosets, mp::Precision prec)
{
    const int deg = static_cast<int>(cosets.size());
    const std::size_t nodes = static_cast<std::size_t>(deg) + 1;

    // values[k][m] = coefficient of X^m in prod_c (X - j((a tau_k + b)/d)).
    std::vector<mp::Complex> ys;
    std::vector<std::vector<mp::Complex>> values;
    for (std::size_t k = 0; k < nodes; ++k) {
        const mp::Complex tau = base_point(static_cast<int>(k), prec);
        ys.push_back(j_eval(tau, prec));
        std::vector<mp::Complex> poly{mp::Complex(1L, prec)};
        for (const auto& c : cosets) {
            mp::Complex t = tau * mp::Real(static_cast<long>(c.a), prec);
            t.re += mp::Real(static_cast<long>(c.b), prec);
            const mp::Real dd(static_cast<long>(c.d), prec);
            t.re /= dd;
            t.im /= dd;
            const mp::Complex r = j_eval(t, prec);
            std::vector<mp::Complex> next(poly.size() + 1, mp::Complex(prec));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * r;
            }
            poly = std::move(next);
        }
        values.push_back(std::move(poly));
    }

    ModularPoly out;
    out.n = n;
    out.precision = prec;
    out.P = BiPoly(deg, deg);
    for (int m = 0; m <= deg; ++m) {
        // Newton divided differences through (y_k, values[k][m]).
        std::vector<mp::Complex> coef;
        for (std::size_t k = 0; k < nodes; ++k)
            coef.push_back(values[k][static_cast<std::size_t>(m)]);
        for (std::size_t level = 1; level < nodes; ++level)
            for (std::size_t i = nodes - 1; i >= level; --i)
                coef[i] = (coef[i] - coef[i - 1]) / (ys[i] - ys[i - level]);
        std::vector<mp::Complex> mono{coef[nodes - 1]};
        for (std::size_t k = nodes - 1; k-- > 0;) {
            std::vector<mp::Complex> next(mono.size() + 1, mp::Complex(prec));
            for (std::size_t i = 0; i < mono.size(); ++i) {
                next[i + 1] += mono[i];
                next[i] -= mono[i] * ys[k];
            }
            next[0] += coef[k];
            mono = std::move(next);
        }
        for (int j = 0; j <= deg; ++j) {
            const mp::Complex& v = mono[static_cast<std::size_t>(j)];
            mpz_class c = v.re.round();
            const double dr = mp::abs(v.re - mp::Real(c, prec)).to_double();
            const double di = mp::abs(v.im).to_double();
            out.max_residual = std::max({out.max_residual, dr, di});
            out.P.at(m, j) = c;
        }
    }
    out.P.normalize();
    return out;
}

} // namespace

ModularPoly compute_modular_poly(int n, const ModPolyOptions& options)
{
    if (n < 1)
        throw InvalidArgument("modular polynomial level must be >= 1, got " + std::to_string(n));
    if (n > options.ceiling)
        throw CeilingError("modular polynomial level " + std::to_string(n) + " exceeds the ceiling " +
                           std::to_string(options.ceiling));
    if (n == 1) {
        ModularPoly out;
        out.P = BiPoly(1, 1);
        out.P.at(1, 0) = 1;
        out.P.at(0, 1) = -1;
        return out;
    }
    const auto cosets = cyclic_cosets(n);
    mp::Precision prec = modpoly_initial_precision(n);
    std::string attempts;
    for (int retry = 0; retry <= options.max_retries; ++retry, prec *= 2) {
        attempts += (attempts.empty() ? "" : ", ") + std::to_string(prec);
        ModularPoly out = attempt(n, cosets, prec);
        if (out.max_residual < 0.25)
            return out;
    }
    throw PrecisionError("modular polynomial Phi_" + std::to_string(n) +
                         " did not round to integers; attempted precisions: " + attempts);
}

const ModularPoly& modular_poly(int n, const ModPolyOptions& options)
{
    if (n > options.ceiling)
        throw CeilingError("modular polynomial level " + std::to_string(n) + " exceeds the ceiling " +
                           std::to_string(options.ceiling));
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<ModularPoly>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<ModularPoly>(compute_modular_poly(n, options))).first;
    return *it->second;
}

bool kronecker_check(const ModularPoly& phi)
{
    const std::int64_t p = phi.n;
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidArgument("Kronecker congruence needs a prime level, got " + std::to_string(p));
    // (X^p - Y)(X - Y^p) = X^(p+1) - X^p Y^p - X Y + Y^(p+1)
    BiPoly expected(static_cast<int>(p + 1), static_cast<int>(p + 1));
    expected.at(static_cast<int>(p + 1), 0) = 1;
    expected.at(static_cast<int>(p), static_cast<int>(p)) = -1;
    expected.at(1, 1) = -1;
    expected.at(0, static_cast<int>(p + 1)) = 1;
    const int dx = std::max(expected.degree_x(), phi.P.degree_x());
    const int dy = std::max(expected.degree_y(), phi.P.degree_y());
    const mpz_class mod(static_cast<long>(p));
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j) {
            mpz_class diff = phi.P.coeff(i, j) - expected.coeff(i, j);
            if (mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t()) == 0)
                return false;
        }
    return true;
}

bool kronecker_check(int p)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidArgument("Kronecker congruence needs a prime level, got " + std::to_string(p));
    return kronecker_check(modular_poly(p));
}

double functional_equation_residual(const ModularPoly& phi, const mp::Complex& tau)
{
    // Size the largest term with a cheap evaluation, then redo at full width.
    mp::Complex t64 = tau;
    t64.set_precision(std::max<mp::Precision>(64, tau.precision()));
    mp::Complex nt = t64 * mp::Real(static_cast<long>(phi.n), t64.precision());
    const double lx = mp::log2_abs(j_eval(t64, 64));
    const double ly = mp::log2_abs(j_eval(nt, 64));
    const double top = log2_largest_term(phi.P, lx, ly);
    const mp::Precision prec = 256 + static_cast<mp::Precision>(std::ceil(std::max(top, 0.0))) + 64;

    mp::Complex t = tau;
    t.set_precision(prec);
    const mp::Complex x = j_eval(t, prec);
    const mp::Complex y = j_eval(t * mp::Real(static_cast<long>(phi.n), prec), prec);
    return mp::log2_abs(evaluate(phi.P, x, y));
}

} // namespace modcm
