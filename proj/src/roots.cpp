#include "modcm/roots.hpp"

#include "modcm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace modcm {

mp::Complex horner(const CPoly& p, const mp::Complex& z)
{
    mp::Complex acc(std::max(z.precision(), p.empty() ? z.precision() : p.back().precision()));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

mp::Complex evaluate(const BiPoly& F, const mp::Complex& x, const mp::Complex& y)
{
    const mp::Precision prec = std::max(x.precision(), y.precision());
    mp::Complex acc(prec);
    for (int i = F.degree_x(); i >= 0; --i) {
        mp::Complex row(prec);
        for (int j = F.degree_y(); j >= 0; --j) {
            row *= y;
            const mpz_class& c = F.coeff(i, j);
            if (c != 0)
                row += mp::Complex(c, prec);
        }
        acc *= x;
        acc += row;
    }
    return acc;
}

double log2_largest_term(const BiPoly& F, double log2_abs_x, double log2_abs_y)
{
    double best = -1e300;
    for (int i = 0; i <= F.degree_x(); ++i)
        for (int j = 0; j <= F.degree_y(); ++j) {
            const mpz_class& c = F.coeff(i, j);
            if (c == 0)
                continue;
            const double lc = mp::Real(c, 64).log2_abs();
            best = std::max(best, lc + i * log2_abs_x + j * log2_abs_y);
        }
    return best;
}

double log2_relative_residual(const BiPoly& F, const mp::Complex& x, const mp::Complex& y)
{
    const mp::Complex v = evaluate(F, x, y);
    if (v.re.is_zero() && v.im.is_zero())
        return -1e300;
    return mp::log2_abs(v) - log2_largest_term(F, std::max(0.0, mp::log2_abs(x)), std::max(0.0, mp::log2_abs(y)));
}

CPoly specialize_x(const BiPoly& F, const mp::Complex& x0)
{
    const mp::Precision prec = x0.precision();
    CPoly out;
    for (int j = 0; j <= F.degree_y(); ++j) {
        mp::Complex acc(prec);
        for (int i = F.degree_x(); i >= 0; --i) {
            acc *= x0;
            const mpz_class& c = F.coeff(i, j);
            if (c != 0)
                acc += mp::Complex(c, prec);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

CPoly specialize_y(const BiPoly& F, const mp::Complex& y0)
{
    return specialize_x(F.transposed(), y0);
}

namespace {

struct Eval {
    mp::Complex value;
    mp::Complex derivative;
    /// Horner of |coefficients| at |z|; scales the rounding error of value.
    double log2_magnitude;
};

Eval evaluate(const CPoly& p, const std::vector<double>& log2_coeff, const mp::Complex& z, mp::Precision prec)
{
    mp::Complex v(prec), d(prec);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        d *= z;
        d += v;
        v *= z;
        v += *it;
    }
    // log2 of sum |a_k| |z|^k, in doubles via running max (an upper bound up to
    // a factor n+1, which is enough for a stopping test).
    const double lz = mp::log2_abs(z);
    double m = -1e300;
    for (std::size_t k = 0; k < log2_coeff.size(); ++k)
        m = std::max(m, log2_coeff[k] + static_cast<double>(k) * lz);
    return {std::move(v), std::move(d), m + std::log2(static_cast<double>(p.size()))};
}

// Initial approximations from the upper convex hull of (k, log2|a_k|).
std::vector<mp::Complex> initial_guesses(const std::vector<double>& lc, mp::Precision prec)
{
    const int n = static_cast<int>(lc.size()) - 1;
    std::vector<int> hull;
    for (int k = 0; k <= n; ++k) {
        if (lc[static_cast<std::size_t>(k)] < -1e200)
            continue;
        while (hull.size() >= 2) {
            const int i = hull[hull.size() - 2], j = hull.back();
            const double cross = (lc[static_cast<std::size_t>(j)] - lc[static_cast<std::size_t>(i)]) * (k - i) -
                                 (lc[static_cast<std::size_t>(k)] - lc[static_cast<std::size_t>(i)]) * (j - i);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    std::vector<mp::Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    const double sigma = 0.7; // phase offset avoiding symmetric starts
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const int i = hull[s], j = hull[s + 1];
        const int count = j - i;
        const double log2r = (lc[static_cast<std::size_t>(i)] - lc[static_cast<std::size_t>(j)]) / count;
        for (int t = 0; t < count; ++t) {
            const double angle = 2.0 * std::numbers::pi * t / count + 2.0 * std::numbers::pi * i / n + sigma;
            mp::Real r(1L, prec);
            mpfr_mul_2si(r.get(), r.get(), static_cast<long>(std::floor(log2r)), MPFR_RNDN);
            r *= mp::Real(std::exp2(log2r - std::floor(log2r)), prec);
            z.emplace_back(r * mp::Real(std::cos(angle), prec), r * mp::Real(std::sin(angle), prec));
        }
    }
    return z;
}

// Runs Aberth sweeps at precision `prec` until every root is either settled
// (relative correction below 2^-(prec-12)) or indistinguishable from a zero of
// p at this precision. Returns false if max_iter sweeps did not suffice.
bool aberth(const CPoly& p, const std::vector<double>& log2_coeff, std::vector<mp::Complex>& z,
            mp::Precision prec, int max_iter)
{
    const std::size_t n = z.size();
    std::vector<char> done(n, 0);
    const double settle = -static_cast<double>(prec) + 12.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i])
                continue;
            Eval e = evaluate(p, log2_coeff, z[i], prec);
            const double lv = mp::log2_abs(e.value);
            if (lv < e.log2_magnitude - static_cast<double>(prec) + 6.0) {
                done[i] = 1;
                continue;
            }
            all = false;
            mp::Complex w = e.value / e.derivative;
            mp::Complex s(prec);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    s += mp::Complex(1L, prec) / (z[i] - z[j]);
            mp::Complex denom = mp::Complex(1L, prec) - w * s;
            mp::Complex corr = w / denom;
            z[i] -= corr;
            if (mp::log2_abs(corr) < mp::log2_abs(z[i]) + settle)
                done[i] = 1;
        }
        if (all)
            return true;
    }
    return std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });
}

} // namespace

std::vector<mp::Complex> polynomial_roots(const CPoly& p0, mp::Precision prec)
{
    CPoly p;
    p.reserve(p0.size());
    for (const auto& c : p0) {
        p.push_back(c);
        p.back().set_precision(prec);
    }
    while (!p.empty() && p.back().re.is_zero() && p.back().im.is_zero())
        p.pop_back();
    if (p.empty())
        throw InvalidArgument("polynomial_roots: zero polynomial");

    // Exact zero roots.
    std::vector<mp::Complex> roots;
    std::size_t low = 0;
    while (low + 1 < p.size() && p[low].re.is_zero() && p[low].im.is_zero())
        ++low;
    for (std::size_t k = 0; k < low; ++k)
        roots.emplace_back(prec);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    if (p.size() < 2)
        return roots;
    if (p.size() == 2) {
        roots.push_back(-(p[0] / p[1]));
        return roots;
    }

    std::vector<double> lc(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        lc[k] = mp::log2_abs(p[k]);

    const mp::Precision coarse = std::min<mp::Precision>(prec, 128);
    CPoly pc = p;
    for (auto& c : pc)
        c.set_precision(coarse);
    std::vector<mp::Complex> z = initial_guesses(lc, coarse);
    const int n = static_cast<int>(p.size()) - 1;
    if (!aberth(pc, lc, z, coarse, 200 + 20 * n))
        throw PrecisionError("root finder did not converge for a polynomial of degree " + std::to_string(n));
    if (prec > coarse) {
        for (auto& r : z)
            r.set_precision(prec);
        // Clustered roots may stall short of full precision; that is accepted.
        aberth(p, lc, z, prec, 60);
    }
    for (auto& r : z)
        roots.push_back(std::move(r));
    return roots;
}

std::vector<mp::Complex> polynomial_roots(const ZPoly& p, mp::Precision prec)
{
    CPoly c;
    c.reserve(p.size());
    for (const auto& a : p)
        c.emplace_back(a, prec);
    return polynomial_roots(c, prec);
}

} // namespace modcm
