#include "modcm/mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace modcm::mp {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Precision max_prec(const Real& a, const Real& b)
{
    return std::max(a.precision(), b.precision());
}
} // namespace

Real::Real(Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, value, kRnd);
}

Real::Real(double value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_d(value_, value, kRnd);
}

Real::Real(const mpz_class& value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_z(value_, value.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept
{
    // Steal the limbs; leave `other` as a valid minimal-precision zero.
    *value_ = *other.value_;
    mpfr_init2(other.value_, MPFR_PREC_MIN);
    mpfr_set_zero(other.value_, 1);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        if (precision() != other.precision())
            mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, kRnd);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    if (this != &other)
        mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(value_);
}

void Real::set_precision(Precision prec)
{
    mpfr_prec_round(value_, prec, kRnd);
}

double Real::log2_abs() const
{
    if (mpfr_zero_p(value_))
        return -1e18;
    long exp = 0;
    double mant = mpfr_get_d_2exp(&exp, value_, kRnd);
    return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

mpz_class Real::round() const
{
    mpz_class out;
    Real tmp(precision());
    mpfr_round(tmp.get(), value_);
    mpfr_get_z(out.get_mpz_t(), tmp.get(), kRnd);
    return out;
}

Real& Real::operator+=(const Real& o)
{
    mpfr_add(value_, value_, o.value_, kRnd);
    return *this;
}
Real& Real::operator-=(const Real& o)
{
    mpfr_sub(value_, value_, o.value_, kRnd);
    return *this;
}
Real& Real::operator*=(const Real& o)
{
    mpfr_mul(value_, value_, o.value_, kRnd);
    return *this;
}
Real& Real::operator/=(const Real& o)
{
    mpfr_div(value_, value_, o.value_, kRnd);
    return *this;
}

Real operator-(const Real& x)
{
    Real r(x.precision());
    mpfr_neg(r.get(), x.get(), kRnd);
    return r;
}

Real Real::pi(Precision prec)
{
    Real r(prec);
    mpfr_const_pi(r.get(), kRnd);
    return r;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_add(r.get(), a.get(), b.get(), kRnd);
    return r;
}
Real operator-(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), kRnd);
    return r;
}
Real operator*(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), kRnd);
    return r;
}
Real operator/(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_div(r.get(), a.get(), b.get(), kRnd);
    return r;
}
bool operator<(const Real& a, const Real& b)
{
    return mpfr_less_p(a.get(), b.get()) != 0;
}

Real sqrt(const Real& x)
{
    Real r(x.precision());
    mpfr_sqrt(r.get(), x.get(), kRnd);
    return r;
}
Real abs(const Real& x)
{
    Real r(x.precision());
    mpfr_abs(r.get(), x.get(), kRnd);
    return r;
}
Real exp(const Real& x)
{
    Real r(x.precision());
    mpfr_exp(r.get(), x.get(), kRnd);
    return r;
}
Real log(const Real& x)
{
    Real r(x.precision());
    mpfr_log(r.get(), x.get(), kRnd);
    return r;
}

std::string to_string(const Real& x, int digits)
{
    if (x.is_zero())
        return "0";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x.get());
    return std::string(buf.data());
}

Complex& Complex::operator+=(const Complex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}
Complex& Complex::operator-=(const Complex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}
Complex& Complex::operator*=(const Complex& o)
{
    *this = *this * o;
    return *this;
}
Complex& Complex::operator/=(const Complex& o)
{
    *this = *this / o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b)
{
    return {a.re + b.re, a.im + b.im};
}
Complex operator-(const Complex& a, const Complex& b)
{
    return {a.re - b.re, a.im - b.im};
}
Complex operator-(const Complex& a)
{
    return {-a.re, -a.im};
}

Complex operator*(const Complex& a, const Complex& b)
{
    Precision prec = std::max(a.precision(), b.precision());
    Complex r(prec);
    Real t(prec);
    mpfr_mul(r.re.get(), a.re.get(), b.re.get(), kRnd);
    mpfr_mul(t.get(), a.im.get(), b.im.get(), kRnd);
    mpfr_sub(r.re.get(), r.re.get(), t.get(), kRnd);
    mpfr_mul(r.im.get(), a.re.get(), b.im.get(), kRnd);
    mpfr_mul(t.get(), a.im.get(), b.re.get(), kRnd);
    mpfr_add(r.im.get(), r.im.get(), t.get(), kRnd);
    return r;
}

Complex operator*(const Complex& a, const Real& b)
{
    return {a.re * b, a.im * b};
}

Complex operator/(const Complex& a, const Complex& b)
{
    Precision prec = std::max(a.precision(), b.precision());
    Real den = norm(b);
    Complex r(prec);
    Real t(prec);
    mpfr_mul(r.re.get(), a.re.get(), b.re.get(), kRnd);
    mpfr_mul(t.get(), a.im.get(), b.im.get(), kRnd);
    mpfr_add(r.re.get(), r.re.get(), t.get(), kRnd);
    mpfr_mul(r.im.get(), a.im.get(), b.re.get(), kRnd);
    mpfr_mul(t.get(), a.re.get(), b.im.get(), kRnd);
    mpfr_sub(r.im.get(), r.im.get(), t.get(), kRnd);
    mpfr_div(r.re.get(), r.re.get(), den.get(), kRnd);
    mpfr_div(r.im.get(), r.im.get(), den.get(), kRnd);
    return r;
}

Real norm(const Complex& z)
{
    Real r(z.precision());
    Real t(z.precision());
    mpfr_sqr(r.get(), z.re.get(), kRnd);
    mpfr_sqr(t.get(), z.im.get(), kRnd);
    mpfr_add(r.get(), r.get(), t.get(), kRnd);
    return r;
}

Real abs(const Complex& z)
{
    Real r(z.precision());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), kRnd);
    return r;
}

double log2_abs(const Complex& z)
{
    Real m(64);
    mpfr_hypot(m.get(), z.re.get(), z.im.get(), kRnd);
    return m.log2_abs();
}

Complex exp_2pi_i(const Complex& z)
{
    Precision prec = z.precision();
    Real two_pi = Real::pi(prec);
    mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, kRnd);
    Real modulus = exp(-(two_pi * z.im));
    Real angle = two_pi * z.re;
    Complex r(prec);
    mpfr_sin_cos(r.im.get(), r.re.get(), angle.get(), kRnd);
    r.re *= modulus;
    r.im *= modulus;
    return r;
}

Complex sqrt(const Complex& z)
{
    // Principal branch: sqrt((|z|+re)/2) + i sign(im) sqrt((|z|-re)/2).
    Precision prec = z.precision();
    Real m = abs(z);
    Real half(prec);
    mpfr_set_d(half.get(), 0.5, kRnd);
    Real u = sqrt((m + z.re) * half);
    Real v = sqrt(abs(m - z.re) * half);
    if (z.im.sign() < 0)
        v = -v;
    return {u, v};
}

std::string to_string(const Complex& z, int digits)
{
    std::string re = to_string(z.re, digits);
    std::string im = to_string(abs(z.im), digits);
    return re + (z.im.sign() < 0 ? " - " : " + ") + im + "i";
}

} // namespace modcm::mp
