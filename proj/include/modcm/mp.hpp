#pragma once

// Thin RAII layer over MPFR. A Real owns one mpfr_t; arithmetic results take
// the larger precision of their operands. Complex is a plain (re, im) pair.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace modcm::mp {

using Precision = mpfr_prec_t;

class Real {
  public:
    explicit Real(Precision prec = 64);
    Real(long value, Precision prec);
    Real(double value, Precision prec);
    Real(const mpz_class& value, Precision prec);
    Real(const mpq_class& value, Precision prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    Precision precision() const { return mpfr_get_prec(value_); }

    /// Round to a new precision in place.
    void set_precision(Precision prec);

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// log2 |x|, or a large negative number for zero.
    double log2_abs() const;
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    /// Nearest integer.
    mpz_class round() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator-(const Real& x);

    static Real pi(Precision prec);

  private:
    mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);

Real sqrt(const Real& x);
Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);

/// Decimal rendering with `digits` significant digits, deterministic.
std::string to_string(const Real& x, int digits = 30);

struct Complex {
    Real re;
    Real im;

    explicit Complex(Precision prec = 64) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const mpz_class& r, Precision prec) : re(r, prec), im(0L, prec) {}
    Complex(const mpq_class& r, Precision prec) : re(r, prec), im(0L, prec) {}
    Complex(long r, Precision prec) : re(r, prec), im(0L, prec) {}

    Precision precision() const { return re.precision(); }
    void set_precision(Precision prec)
    {
        re.set_precision(prec);
        im.set_precision(prec);
    }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Complex& b);

/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
/// log2 |z|, large negative for zero.
double log2_abs(const Complex& z);
/// exp(2 pi i z)
Complex exp_2pi_i(const Complex& z);
Complex sqrt(const Complex& z);

std::string to_string(const Complex& z, int digits = 30);

} // namespace modcm::mp
