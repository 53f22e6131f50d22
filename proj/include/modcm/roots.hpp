#pragma once

// Numeric side of polynomial work: evaluation of integer polynomials at
// multiprecision complex points and simultaneous root finding
// (Aberth-Ehrlich iteration).

#include "modcm/mp.hpp"
#include "modcm/poly.hpp"

#include <vector>

namespace modcm {

using CPoly = std::vector<mp::Complex>;

/// p(z) by Horner; coefficients low to high.
mp::Complex horner(const CPoly& p, const mp::Complex& z);

/// F(x, y) by nested Horner.
mp::Complex evaluate(const BiPoly& F, const mp::Complex& x, const mp::Complex& y);

/// log2 of max_{i,j} |c_ij| |x|^i |y|^j: the size of the largest term, used to
/// scale residuals and to choose working precisions.
double log2_largest_term(const BiPoly& F, double log2_abs_x, double log2_abs_y);

/// |F(x, y)| / 2^log2_largest_term(F, max(|x|, 1), max(|y|, 1)), as a log2.
/// Near -prec for a point on F = 0; the floor of 1 on |x|, |y| makes
/// coordinates that are numerically zero count by absolute error.
double log2_relative_residual(const BiPoly& F, const mp::Complex& x, const mp::Complex& y);

/// F(x0, Y) as a polynomial in Y with complex coefficients.
CPoly specialize_x(const BiPoly& F, const mp::Complex& x0);
/// F(X, y0) as a polynomial in X.
CPoly specialize_y(const BiPoly& F, const mp::Complex& y0);

/// All deg(p) roots of p at working precision `prec`. Initial approximations
/// are spread on circles whose radii come from the Newton polygon of
/// log|coefficients|. The leading coefficient must be nonzero.
/// Throws PrecisionError if the iteration fails to settle.
std::vector<mp::Complex> polynomial_roots(const CPoly& p, mp::Precision prec);

/// Convenience overload for integer coefficients.
std::vector<mp::Complex> polynomial_roots(const ZPoly& p, mp::Precision prec);

} // namespace modcm
