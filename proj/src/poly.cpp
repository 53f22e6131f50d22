#include "modcm/poly.hpp"

#include "modcm/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace modcm {

void trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int degree(const ZPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

int degree(const QPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

ZPoly add(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& s)
{
    ZPoly r(a);
    for (auto& c : r)
        c *= s;
    trim(r);
    return r;
}

mpz_class eval(const ZPoly& p, const mpz_class& x)
{
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpq_class eval(const ZPoly& p, const mpq_class& x)
{
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

mpz_class content(const ZPoly& p)
{
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p)
{
    if (p.empty())
        return {};
    mpz_class g = content(p);
    if (p.back() < 0)
        g = -g;
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

QPoly to_q(const ZPoly& p)
{
    QPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[i];
    return r;
}

QPoly rem(const QPoly& a, const QPoly& b)
{
    if (b.empty())
        throw InvalidArgument("polynomial remainder by zero");
    QPoly r(a);
    trim(r);
    const int db = degree(b);
    const mpq_class& lb = b.back();
    while (degree(r) >= db) {
        const int shift = degree(r) - db;
        mpq_class q = r.back() / lb;
        for (int i = 0; i <= db; ++i)
            r[i + shift] -= q * b[i];
        r.pop_back();
        trim(r);
    }
    return r;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient)
{
    if (b.empty())
        throw InvalidArgument("polynomial division by zero");
    ZPoly r(a);
    trim(r);
    const int db = degree(b);
    if (degree(r) < db) {
        quotient.clear();
        return r.empty();
    }
    quotient.assign(static_cast<std::size_t>(degree(r) - db + 1), mpz_class(0));
    const mpz_class& lb = b.back();
    while (degree(r) >= db) {
        const int shift = degree(r) - db;
        if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t()))
            return false;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
        quotient[shift] = q;
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[i + shift].get_mpz_t(), q.get_mpz_t(), b[i].get_mpz_t());
        trim(r);
    }
    return r.empty();
}

namespace {

/// lc(b)^(deg a - deg b + 1) * a mod b, exactly over Z.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(a);
    const int db = degree(b);
    const mpz_class& lb = b.back();
    int e = degree(a) - db + 1;
    while (!r.empty() && degree(r) >= db) {
        const int shift = degree(r) - db;
        mpz_class lr = r.back();
        for (auto& c : r)
            c *= lb;
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[i + shift].get_mpz_t(), lr.get_mpz_t(), b[i].get_mpz_t());
        trim(r);
        --e;
    }
    if (e > 0) {
        mpz_class m;
        mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : r)
            c *= m;
    }
    return r;
}

} // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0)
{
    ZPoly a = primitive_part(a0);
    ZPoly b = primitive_part(b0);
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    if (degree(a) < degree(b))
        std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

mpz_class resultant(const ZPoly& f, const ZPoly& g)
{
    QPoly a = to_q(f), b = to_q(g);
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    mpq_class acc = 1;
    mpq_class factor;
    while (true) {
        const int n = degree(a), m = degree(b);
        if (n == 0) {
            mpz_pow_ui(factor.get_num_mpz_t(), a[0].get_num_mpz_t(), static_cast<unsigned long>(m));
            mpz_pow_ui(factor.get_den_mpz_t(), a[0].get_den_mpz_t(), static_cast<unsigned long>(m));
            factor.canonicalize();
            acc *= factor;
            break;
        }
        if (m == 0) {
            mpz_pow_ui(factor.get_num_mpz_t(), b[0].get_num_mpz_t(), static_cast<unsigned long>(n));
            mpz_pow_ui(factor.get_den_mpz_t(), b[0].get_den_mpz_t(), static_cast<unsigned long>(n));
            factor.canonicalize();
            acc *= factor;
            break;
        }
        QPoly r = rem(a, b);
        if (r.empty())
            return 0;
        // Res(a, b) = (-1)^(nm) lc(b)^(n - deg r) Res(b, r)
        const int e = n - degree(r);
        mpz_pow_ui(factor.get_num_mpz_t(), b.back().get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(factor.get_den_mpz_t(), b.back().get_den_mpz_t(), static_cast<unsigned long>(e));
        factor.canonicalize();
        acc *= factor;
        if ((n * m) & 1)
            acc = -acc;
        a = std::move(b);
        b = std::move(r);
    }
    if (acc.get_den() != 1)
        throw DegenerateError("resultant of integer polynomials is not integral");
    return acc.get_num();
}

ZPoly interpolate_consecutive(std::span<const mpz_class> values)
{
    const std::size_t count = values.size();
    if (count == 0)
        return {};
    // Forward differences: diff[k] = Delta^k v(0).
    std::vector<mpz_class> table(values.begin(), values.end());
    std::vector<mpz_class> diff(count);
    for (std::size_t k = 0; k < count; ++k) {
        diff[k] = table[0];
        for (std::size_t i = 0; i + 1 < count - k; ++i)
            table[i] = table[i + 1] - table[i];
    }
    // N! * P(x) = sum_k diff[k] * (N!/k!) * x(x-1)...(x-k+1)
    const std::size_t n = count - 1;
    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), n);
    ZPoly acc(count);
    ZPoly falling{mpz_class(1)};
    mpz_class ratio = nfact; // N!/k!
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0) {
            falling = mul(falling, ZPoly{mpz_class(-static_cast<long>(k - 1)), mpz_class(1)});
            mpz_divexact_ui(ratio.get_mpz_t(), ratio.get_mpz_t(), k);
        }
        if (diff[k] == 0)
            continue;
        mpz_class w = diff[k] * ratio;
        for (std::size_t i = 0; i < falling.size(); ++i)
            mpz_addmul(acc[i].get_mpz_t(), w.get_mpz_t(), falling[i].get_mpz_t());
    }
    for (auto& c : acc) {
        if (!mpz_divisible_p(c.get_mpz_t(), nfact.get_mpz_t()))
            throw DegenerateError("interpolant through integer values is not integral");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), nfact.get_mpz_t());
    }
    trim(acc);
    return acc;
}

std::string to_string(const ZPoly& p, const char* var)
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(p); i >= 0; --i) {
        const mpz_class& c = p[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i > 0) {
            if (mag != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- BiPoly

namespace {
const mpz_class kZero = 0;
}

BiPoly::BiPoly(int dx, int dy)
    : c_(static_cast<std::size_t>(dx + 1), std::vector<mpz_class>(static_cast<std::size_t>(dy + 1)))
{
}

const mpz_class& BiPoly::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= rows() || static_cast<std::size_t>(j) >= cols())
        return kZero;
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

mpz_class& BiPoly::at(int i, int j)
{
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    if (ui >= rows() || uj >= cols()) {
        const std::size_t nr = std::max(rows(), ui + 1), nc = std::max(cols(), uj + 1);
        c_.resize(nr);
        for (auto& row : c_)
            row.resize(nc);
    }
    return c_[ui][uj];
}

int BiPoly::degree_x() const
{
    for (int i = static_cast<int>(rows()) - 1; i >= 0; --i)
        for (const auto& v : c_[static_cast<std::size_t>(i)])
            if (v != 0)
                return i;
    return -1;
}

int BiPoly::degree_y() const
{
    for (int j = static_cast<int>(cols()) - 1; j >= 0; --j)
        for (const auto& row : c_)
            if (row[static_cast<std::size_t>(j)] != 0)
                return j;
    return -1;
}

bool BiPoly::is_zero() const
{
    return degree_x() < 0;
}

void BiPoly::normalize()
{
    const int dx = degree_x(), dy = degree_y();
    if (dx < 0) {
        c_.clear();
        return;
    }
    c_.resize(static_cast<std::size_t>(dx + 1));
    for (auto& row : c_)
        row.resize(static_cast<std::size_t>(dy + 1));
}

BiPoly BiPoly::transposed() const
{
    BiPoly t(static_cast<int>(cols()) - 1, static_cast<int>(rows()) - 1);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            t.c_[j][i] = c_[i][j];
    return t;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r(*this);
    for (auto& row : r.c_)
        for (auto& v : row)
            v = -v;
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b)
{
    const int dx = std::max(a.degree_x(), b.degree_x());
    const int dy = std::max(a.degree_y(), b.degree_y());
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j)
            if (a.coeff(i, j) != b.coeff(i, j))
                return false;
    return true;
}

ZPoly BiPoly::row(int i) const
{
    ZPoly r;
    if (i >= 0 && static_cast<std::size_t>(i) < rows())
        r = c_[static_cast<std::size_t>(i)];
    trim(r);
    return r;
}

ZPoly BiPoly::column(int j) const
{
    ZPoly r(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        r[i] = coeff(static_cast<int>(i), j);
    trim(r);
    return r;
}

ZPoly BiPoly::specialize_x(const mpz_class& x0) const
{
    ZPoly r(cols());
    mpz_class power = 1;
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j)
            mpz_addmul(r[j].get_mpz_t(), c_[i][j].get_mpz_t(), power.get_mpz_t());
        power *= x0;
    }
    trim(r);
    return r;
}

ZPoly BiPoly::specialize_y(const mpz_class& y0) const
{
    ZPoly r(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        r[i] = modcm::eval(ZPoly(c_[i]), y0);
    trim(r);
    return r;
}

mpz_class BiPoly::eval(const mpz_class& x, const mpz_class& y) const
{
    return modcm::eval(specialize_x(x), y);
}

mpz_class BiPoly::content() const
{
    mpz_class g = 0;
    for (const auto& row : c_)
        for (const auto& v : row)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

BiPoly BiPoly::primitive_part() const
{
    BiPoly r(*this);
    r.normalize();
    const mpz_class g = content();
    if (g == 0 || g == 1)
        return r;
    for (auto& row : r.c_)
        for (auto& v : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

BiPoly mul(const BiPoly& a, const BiPoly& b)
{
    const int ax = a.degree_x(), ay = a.degree_y(), bx = b.degree_x(), by = b.degree_y();
    if (ax < 0 || bx < 0)
        return {};
    BiPoly r(ax + bx, ay + by);
    for (int i = 0; i <= ax; ++i)
        for (int j = 0; j <= ay; ++j) {
            const mpz_class& u = a.coeff(i, j);
            if (u == 0)
                continue;
            for (int k = 0; k <= bx; ++k)
                for (int l = 0; l <= by; ++l)
                    mpz_addmul(r.at(i + k, j + l).get_mpz_t(), u.get_mpz_t(), b.coeff(k, l).get_mpz_t());
        }
    r.normalize();
    return r;
}

BiPoly sub(const BiPoly& a, const BiPoly& b)
{
    const int dx = std::max(a.degree_x(), b.degree_x());
    const int dy = std::max(a.degree_y(), b.degree_y());
    if (dx < 0)
        return {};
    BiPoly r(dx, dy);
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j)
            r.at(i, j) = a.coeff(i, j) - b.coeff(i, j);
    r.normalize();
    return r;
}

bool divide_exact(const BiPoly& a, const BiPoly& b, BiPoly& quotient)
{
    if (b.is_zero())
        throw InvalidArgument("bivariate division by zero");
    BiPoly r(a);
    r.normalize();
    quotient = BiPoly();
    const int byd = b.degree_y();
    int bxd = -1;
    for (int i = b.degree_x(); i >= 0; --i)
        if (b.coeff(i, byd) != 0) {
            bxd = i;
            break;
        }
    const mpz_class lb = b.coeff(bxd, byd);
    const int bdx = b.degree_x();
    int ry = r.degree_y();
    while (ry >= 0) {
        int rx = -1;
        for (int i = r.degree_x(); i >= 0; --i)
            if (r.coeff(i, ry) != 0) {
                rx = i;
                break;
            }
        if (rx < 0) {
            --ry;
            continue;
        }
        if (ry < byd || rx < bxd)
            return false;
        const mpz_class& lr = r.coeff(rx, ry);
        if (!mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t()))
            return false;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
        const int sx = rx - bxd, sy = ry - byd;
        quotient.at(sx, sy) = q;
        for (int i = 0; i <= bdx; ++i)
            for (int j = 0; j <= byd; ++j) {
                const mpz_class& bc = b.coeff(i, j);
                if (bc != 0)
                    mpz_submul(r.at(i + sx, j + sy).get_mpz_t(), q.get_mpz_t(), bc.get_mpz_t());
            }
    }
    quotient.normalize();
    return true;
}

BiPoly interpolate_grid(const std::vector<std::vector<mpz_class>>& values)
{
    const std::size_t nx = values.size();
    if (nx == 0)
        return {};
    const std::size_t ny = values.front().size();
    std::vector<ZPoly> rows_in_y(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        rows_in_y[i] = interpolate_consecutive(values[i]);
        rows_in_y[i].resize(ny);
    }
    BiPoly out(static_cast<int>(nx) - 1, static_cast<int>(ny) - 1);
    std::vector<mpz_class> column(nx);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i)
            column[i] = rows_in_y[i][j];
        ZPoly px = interpolate_consecutive(column);
        for (std::size_t i = 0; i < px.size(); ++i)
            out.at(static_cast<int>(i), static_cast<int>(j)) = px[i];
    }
    out.normalize();
    return out;
}

} // namespace modcm
