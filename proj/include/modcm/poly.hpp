#pragma once

// Exact integer polynomials. ZPoly stores coefficients low to high and is kept
// trimmed (no trailing zeros; the zero polynomial is empty). BiPoly stores a
// dense coefficient matrix: coeff(i, j) multiplies X^i Y^j.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace modcm {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p);
void trim(QPoly& p);
/// Degree, or -1 for the zero polynomial.
int degree(const ZPoly& p);
int degree(const QPoly& p);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& s);

mpz_class eval(const ZPoly& p, const mpz_class& x);
mpq_class eval(const ZPoly& p, const mpq_class& x);

/// gcd of the coefficients (nonnegative; zero for the zero polynomial).
mpz_class content(const ZPoly& p);
/// p / content(p), with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);

/// Remainder of a by b over Q.
QPoly rem(const QPoly& a, const QPoly& b);
QPoly to_q(const ZPoly& p);

/// Exact quotient a / b when b divides a in Z[x]; returns false otherwise.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

/// Primitive gcd over Q (normalized: primitive, positive leading coefficient).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Res(f, g) = lc(f)^deg(g) * prod_{f(r)=0} g(r), computed by the Euclidean
/// recursion over Q. Uses the true (trimmed) degrees of f and g.
mpz_class resultant(const ZPoly& f, const ZPoly& g);

/// Interpolate the unique polynomial of degree <= values.size()-1 through
/// (k, values[k]) for k = 0..N. Throws if the interpolant is not integral.
ZPoly interpolate_consecutive(std::span<const mpz_class> values);

std::string to_string(const ZPoly& p, const char* var = "X");

class BiPoly {
  public:
    BiPoly() = default;
    /// Zero polynomial with room for X-degree dx and Y-degree dy.
    BiPoly(int dx, int dy);

    const mpz_class& coeff(int i, int j) const;
    mpz_class& at(int i, int j);

    /// Degree in X (first variable), -1 if zero.
    int degree_x() const;
    /// Degree in Y (second variable), -1 if zero.
    int degree_y() const;
    bool is_zero() const;

    /// Drop all-zero trailing rows/columns.
    void normalize();

    BiPoly transposed() const;
    BiPoly operator-() const;
    friend bool operator==(const BiPoly& a, const BiPoly& b);

    /// Coefficient of X^i as a polynomial in Y.
    ZPoly row(int i) const;
    /// Coefficient of Y^j as a polynomial in X.
    ZPoly column(int j) const;

    /// F(x0, Y) as a polynomial in Y.
    ZPoly specialize_x(const mpz_class& x0) const;
    /// F(X, y0) as a polynomial in X.
    ZPoly specialize_y(const mpz_class& y0) const;
    mpz_class eval(const mpz_class& x, const mpz_class& y) const;

    mpz_class content() const;
    BiPoly primitive_part() const;

    std::size_t rows() const { return c_.size(); }
    std::size_t cols() const { return c_.empty() ? 0 : c_.front().size(); }

  private:
    std::vector<std::vector<mpz_class>> c_;
};

BiPoly mul(const BiPoly& a, const BiPoly& b);
BiPoly sub(const BiPoly& a, const BiPoly& b);

/// Exact division test over Z (lex order, Y major). On success fills quotient.
bool divide_exact(const BiPoly& a, const BiPoly& b, BiPoly& quotient);

/// Interpolate a bivariate polynomial from its values on the grid
/// {0..Nx} x {0..Ny}: values[i][j] = G(i, j).
BiPoly interpolate_grid(const std::vector<std::vector<mpz_class>>& values);

} // namespace modcm
