#include "modcm/singular_moduli.hpp"

#include "modcm/errors.hpp"
#include "modcm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace modcm {

mp::Complex tau_of_form(const QuadForm& q, mp::Precision prec)
{
    const std::int64_t D = q.discriminant();
    if (D >= 0 || q.a <= 0)
        throw InvalidArgument("tau_of_form expects a positive definite form, got " + to_string(q));
    mp::Real two_a(static_cast<long>(2 * q.a), prec);
    mp::Real re(static_cast<long>(-q.b), prec);
    re /= two_a;
    mp::Real im = mp::sqrt(mp::Real(static_cast<long>(-D), prec));
    im /= two_a;
    return {re, im};
}

mp::Complex reduce_to_fundamental_domain(const mp::Complex& tau)
{
    if (tau.im.sign() <= 0)
        throw InvalidArgument("tau must lie in the upper half plane");
    mp::Complex t = tau;
    const mp::Precision prec = t.precision();
    const mp::Real one(1L, prec);
    for (int iter = 0; iter < 100000; ++iter) {
        mp::Real shift(prec);
        mpfr_round(shift.get(), t.re.get());
        t.re -= shift;
        if (mp::norm(t) < one) {
            // -1/tau = -conj(tau) / |tau|^2
            mp::Real n = mp::norm(t);
            t.re = -(t.re / n);
            t.im = t.im / n;
            continue;
        }
        return t;
    }
    throw PrecisionError("fundamental-domain reduction did not terminate");
}

namespace {

// sigma_3(n) for n = 0..N.
std::vector<long> sigma3_table(long N)
{
    std::vector<long> s(static_cast<std::size_t>(N + 1), 0);
    for (long d = 1; d <= N; ++d) {
        const long d3 = d * d * d;
        for (long m = d; m <= N; m += d)
            s[static_cast<std::size_t>(m)] += d3;
    }
    return s;
}

} // namespace

mp::Complex j_eval(const mp::Complex& tau, mp::Precision prec, mp::Precision ceiling)
{
    if (prec > ceiling)
        throw CeilingError("requested precision " + std::to_string(prec) + " exceeds ceiling " +
                           std::to_string(ceiling));
    if (tau.im.sign() <= 0)
        throw InvalidArgument("j_eval: tau must lie in the upper half plane");
    const mp::Precision wp = prec + kJGuardBits;
    mp::Complex t = tau;
    t.set_precision(std::max(wp, tau.precision()));
    t = reduce_to_fundamental_domain(t);
    t.set_precision(wp);

    const mp::Complex q = mp::exp_2pi_i(t);
    // |q| = exp(-2 pi Im t); bits gained per power of q.
    const double bits_per_term = 2.0 * std::numbers::pi * t.im.to_double() / std::numbers::ln2;
    const long N = static_cast<long>(std::ceil((static_cast<double>(wp) + 16.0) / bits_per_term)) + 2;

    // E4 = 1 + 240 sum sigma3(n) q^n, by Horner.
    const auto sigma = sigma3_table(N);
    mp::Complex s(wp);
    for (long n = N; n >= 1; --n) {
        mpfr_add_si(s.re.get(), s.re.get(), sigma[static_cast<std::size_t>(n)], MPFR_RNDN);
        s = s * q;
    }
    mp::Complex e4 = s * mp::Real(240L, wp);
    mpfr_add_ui(e4.re.get(), e4.re.get(), 1, MPFR_RNDN);

    // prod (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2) over k in Z.
    mp::Complex eta(1L, wp);
    mp::Complex power(1L, wp);
    long exponent = 0;
    for (long k = 1;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        const long e2 = k * (3 * k + 1) / 2;
        if (e1 > N)
            break;
        for (; exponent < e1; ++exponent)
            power = power * q;
        if (k & 1)
            eta -= power;
        else
            eta += power;
        if (e2 > N)
            break;
        for (; exponent < e2; ++exponent)
            power = power * q;
        if (k & 1)
            eta -= power;
        else
            eta += power;
    }
    // Delta = q * eta^24
    mp::Complex e2 = eta * eta;
    mp::Complex e4p = e2 * e2;
    mp::Complex e8 = e4p * e4p;
    mp::Complex e16 = e8 * e8;
    mp::Complex delta = q * (e16 * e8);

    mp::Complex j = (e4 * e4 * e4) / delta;
    j.set_precision(prec);
    return j;
}

mp::Precision hilbert_initial_precision(const OrderDisc& order)
{
    double inv_a = 0.0;
    for (const auto& q : reduced_forms(order))
        inv_a += 1.0 / static_cast<double>(q.a);
    const double bits = std::numbers::pi * std::sqrt(static_cast<double>(-order.disc)) / std::numbers::ln2 * inv_a;
    return 32 + static_cast<mp::Precision>(std::ceil(bits));
}

HilbertClassPoly hilbert_class_poly(const OrderDisc& order, const HilbertOptions& options)
{
    const auto forms = reduced_forms(order);
    mp::Precision prec = hilbert_initial_precision(order);
    std::string attempts;
    for (int attempt = 0; attempt <= options.max_retries; ++attempt, prec *= 2) {
        if (prec > options.ceiling)
            break;
        attempts += (attempts.empty() ? "" : ", ") + std::to_string(prec);
        // prod (X - r), coefficients low to high.
        std::vector<mp::Complex> poly{mp::Complex(1L, prec)};
        for (const auto& form : forms) {
            mp::Complex r = j_eval(tau_of_form(form, prec), prec, options.ceiling);
            std::vector<mp::Complex> next(poly.size() + 1, mp::Complex(prec));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * r;
            }
            poly = std::move(next);
        }
        HilbertClassPoly out{order, ZPoly(poly.size()), prec, 0.0};
        for (std::size_t i = 0; i < poly.size(); ++i) {
            out.coeffs[i] = poly[i].re.round();
            mp::Real diff = mp::abs(poly[i].re - mp::Real(out.coeffs[i], prec));
            const double residual = std::max(diff.to_double(), mp::abs(poly[i].im).to_double());
            out.max_residual = std::max(out.max_residual, residual);
        }
        if (out.max_residual < 0.25)
            return out;
    }
    throw PrecisionError("Hilbert class polynomial for D = " + std::to_string(order.disc) +
                         " did not round to integers; attempted precisions: " + attempts);
}

CMJInvariant cm_j_invariant(const OrderDisc& order, const QuadForm& form, mp::Precision prec)
{
    if (form.discriminant() != order.disc)
        throw InvalidArgument("form " + to_string(form) + " does not have discriminant " + std::to_string(order.disc));
    QuadForm reduced = reduce(form);
    return {order, reduced, j_eval(tau_of_form(reduced, prec), prec)};
}

std::vector<CMJInvariant> cm_j_invariants(const OrderDisc& order, mp::Precision prec)
{
    std::vector<CMJInvariant> out;
    for (const auto& form : reduced_forms(order))
        out.push_back(cm_j_invariant(order, form, prec));
    return out;
}

CMJInvariant torsor_act(const QuadForm& q, const CMJInvariant& x)
{
    if (q.discriminant() != x.order.disc)
        throw InvalidArgument("torsor_act: class " + to_string(q) + " and point of discriminant " +
                              std::to_string(x.order.disc) + " differ in discriminant");
    return cm_j_invariant(x.order, compose(inverse(q), x.form), x.value.precision());
}

namespace {

double log2_relative_distance(const mp::Complex& a, const mp::Complex& b)
{
    const mp::Complex d = a - b;
    if (d.re.is_zero() && d.im.is_zero())
        return -1e300;
    return mp::log2_abs(d) - std::max(0.0, mp::log2_abs(b));
}

} // namespace

TorsorReport check_torsor(const OrderDisc& order, mp::Precision prec)
{
    TorsorReport report;
    report.order = order;
    const auto forms = reduced_forms(order);
    report.h = static_cast<std::int64_t>(forms.size());
    const HilbertClassPoly H = hilbert_class_poly(order);
    // Evaluating H near a root cancels about H.precision bits.
    const mp::Precision wp = prec + H.precision;
    const auto roots = polynomial_roots(H.coeffs, wp);
    const double tol = -static_cast<double>(prec) / 2.0;

    auto match = [&](const mp::Complex& z, double& dist) {
        std::size_t best = 0;
        dist = 1e300;
        for (std::size_t k = 0; k < roots.size(); ++k) {
            const double d = log2_relative_distance(z, roots[k]);
            if (d < dist) {
                dist = d;
                best = k;
            }
        }
        return best;
    };

    const CMJInvariant base = cm_j_invariant(order, principal_form(order.disc), wp);
    std::vector<int> hits(roots.size(), 0);
    report.log2_worst_match = -1e300;
    bool matched = true;
    for (const auto& q : forms) {
        double dist = 0.0;
        const std::size_t k = match(torsor_act(q, base).value, dist);
        report.log2_worst_match = std::max(report.log2_worst_match, dist);
        matched = matched && dist < tol;
        ++hits[k];
    }
    report.free = matched && std::all_of(hits.begin(), hits.end(), [](int c) { return c <= 1; });
    report.transitive = matched && std::all_of(hits.begin(), hits.end(), [](int c) { return c >= 1; });

    report.action_law = true;
    const std::size_t m = std::min<std::size_t>(forms.size(), 6);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto lhs = torsor_act(forms[a], torsor_act(forms[b], base));
            const auto rhs = torsor_act(compose(forms[a], forms[b]), base);
            if (log2_relative_distance(lhs.value, rhs.value) >= tol)
                report.action_law = false;
        }
    return report;
}

} // namespace modcm
