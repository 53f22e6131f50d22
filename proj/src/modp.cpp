#include "modcm/modp.hpp"

#include "modcm/arith.hpp"
#include "modcm/errors.hpp"

#include <utility>

namespace modcm::modp {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const
{
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw InvalidArgument("inverse of zero mod p");
    return pow(a, p_ - 2);
}

std::uint64_t Field::reduce(const mpz_class& x) const
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p_);
    return r.get_ui();
}

Poly Field::reduce(const ZPoly& f) const
{
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = reduce(f[i]);
    trim(r);
    return r;
}

void Field::trim(Poly& f) const
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Poly Field::rem(const Poly& a, const Poly& b) const
{
    if (b.empty())
        throw InvalidArgument("remainder by zero polynomial mod p");
    Poly r(a);
    trim(r);
    const std::size_t db = b.size() - 1;
    const std::uint64_t il = inv(b.back());
    while (r.size() > db) {
        const std::size_t shift = r.size() - 1 - db;
        const std::uint64_t q = mul(r.back(), il);
        for (std::size_t i = 0; i <= db; ++i)
            r[i + shift] = sub(r[i + shift], mul(q, b[i]));
        r.pop_back();
        trim(r);
    }
    return r;
}

Poly Field::divide(const Poly& a, const Poly& b) const
{
    Poly r(a);
    trim(r);
    const std::size_t db = b.size() - 1;
    if (r.size() <= db)
        return {};
    Poly q(r.size() - db, 0);
    const std::uint64_t il = inv(b.back());
    while (r.size() > db) {
        const std::size_t shift = r.size() - 1 - db;
        const std::uint64_t c = mul(r.back(), il);
        q[shift] = c;
        for (std::size_t i = 0; i <= db; ++i)
            r[i + shift] = sub(r[i + shift], mul(c, b[i]));
        r.pop_back();
        trim(r);
    }
    trim(q);
    return q;
}

Poly Field::mul(const Poly& a, const Poly& b) const
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = add(r[i + j], mul(a[i], b[j]));
    trim(r);
    return r;
}

Poly Field::mulmod(const Poly& a, const Poly& b, const Poly& m) const
{
    return rem(mul(a, b), m);
}

Poly Field::powmod(const Poly& base, std::uint64_t e, const Poly& m) const
{
    Poly r{1 % p_};
    Poly b = rem(base, m);
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

Poly Field::gcd(const Poly& a0, const Poly& b0) const
{
    Poly a(a0), b(b0);
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t il = inv(a.back());
        for (auto& c : a)
            c = mul(c, il);
    }
    return a;
}

Poly Field::derivative(const Poly& f) const
{
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(mul(f[i], i % p_));
    trim(d);
    return d;
}

std::uint64_t Field::eval(const Poly& f, std::uint64_t x) const
{
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = add(mul(acc, x), *it);
    return acc;
}

std::uint64_t Field::resultant(Poly a, Poly b) const
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    std::uint64_t acc = 1;
    while (true) {
        const std::size_t n = a.size() - 1, m = b.size() - 1;
        if (n == 0)
            return mul(acc, pow(a[0], m));
        if (m == 0)
            return mul(acc, pow(b[0], n));
        Poly r = rem(a, b);
        if (r.empty())
            return 0;
        acc = mul(acc, pow(b.back(), n - (r.size() - 1)));
        if ((n * m) & 1)
            acc = sub(0, acc);
        a = std::move(b);
        b = std::move(r);
    }
}

Poly Field::interpolate_consecutive(const std::vector<std::uint64_t>& values) const
{
    // Newton divided differences at nodes 0..N.
    const std::size_t count = values.size();
    std::vector<std::uint64_t> coef(values);
    for (std::size_t k = 1; k < count; ++k) {
        const std::uint64_t ik = inv(k % p_);
        for (std::size_t i = count - 1; i >= k; --i)
            coef[i] = mul(sub(coef[i], coef[i - 1]), ik);
    }
    Poly result{};
    for (std::size_t k = count; k-- > 0;) {
        // result = result * (x - k) + coef[k]
        Poly next(result.size() + 1, 0);
        const std::uint64_t nk = sub(0, k % p_);
        for (std::size_t i = 0; i < result.size(); ++i) {
            next[i + 1] = add(next[i + 1], result[i]);
            next[i] = add(next[i], mul(result[i], nk));
        }
        next[0] = add(next[0], coef[k]);
        result = std::move(next);
    }
    trim(result);
    return result;
}

std::vector<int> Field::factor_degrees(const Poly& f0) const
{
    Poly f(f0);
    trim(f);
    if (f.size() < 2)
        return {};
    if (gcd(f, derivative(f)).size() != 1)
        return {};
    const std::uint64_t il = inv(f.back());
    for (auto& c : f)
        c = mul(c, il);
    std::vector<int> degrees;
    const Poly x{0, 1};
    Poly h = x;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = powmod(h, p_, f);
        Poly hx = h;
        if (hx.size() < 2)
            hx.resize(2, 0);
        hx[1] = sub(hx[1], 1);
        trim(hx);
        Poly g = gcd(hx, f);
        if (g.size() > 1) {
            const int count = static_cast<int>(g.size() - 1) / d;
            for (int k = 0; k < count; ++k)
                degrees.push_back(d);
            f = divide(f, g);
            h = rem(h, f);
        }
    }
    if (f.size() > 1)
        degrees.push_back(static_cast<int>(f.size()) - 1);
    return degrees;
}

std::uint64_t large_prime(int index)
{
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        for (std::uint64_t n = (1ULL << 62) - 1; out.size() < 16; n -= 2)
            if (is_prime(n))
                out.push_back(n);
        return out;
    }();
    return primes[static_cast<std::size_t>(index) % primes.size()];
}

} // namespace modcm::modp
