#pragma once

// Classical modular polynomials Phi_n(X, Y), built from the cyclic cosets
// (a b; 0 d) by numeric evaluation and interpolation.

#include "modcm/mp.hpp"
#include "modcm/poly.hpp"

#include <cstdint>
#include <vector>

namespace modcm {

inline constexpr int kDefaultModPolyCeiling = 13;

/// psi(n) = n prod_{p | n} (1 + 1/p). Throws InvalidArgument for n <= 0.
std::int64_t psi(std::int64_t n);

/// Upper triangular representative (a b; 0 d) of a cyclic n-isogeny.
struct CycCoset {
    std::int64_t a = 1, b = 0, d = 1;
    friend bool operator==(const CycCoset&, const CycCoset&) = default;
};

/// All (a, b, d) with ad = n, 0 <= b < d, gcd(a, b, d) = 1; ordered by d, then b.
std::vector<CycCoset> cyclic_cosets(std::int64_t n);

struct ModularPoly {
    int n = 1;
    /// coeff(i, j) multiplies X^i Y^j.
    BiPoly P;
    /// Working precision of the successful interpolation (0 for n = 1).
    mp::Precision precision = 0;
    /// Largest distance of an interpolated coefficient from its rounded value.
    double max_residual = 0.0;
};

struct ModPolyOptions {
    int ceiling = kDefaultModPolyCeiling;
    int max_retries = 4;
};

/// 256 + 64 psi(n) bits.
mp::Precision modpoly_initial_precision(int n);

/// Phi_n computed afresh. Throws InvalidArgument for n < 1, CeilingError above
/// the ceiling, PrecisionError if rounding never settles.
ModularPoly compute_modular_poly(int n, const ModPolyOptions& options = {});

/// Cached Phi_n (thread safe). The ceiling is checked on every call.
const ModularPoly& modular_poly(int n, const ModPolyOptions& options = {});

/// Phi_p == (X^p - Y)(X - Y^p) mod p.
bool kronecker_check(const ModularPoly& phi);
/// Same, for the cached Phi_p. Throws InvalidArgument if p is not prime.
bool kronecker_check(int p);

/// log2 |Phi_n(j(tau), j(n tau))|, evaluated with enough bits that the result
/// is an absolute value: 256 bits beyond the largest term of the sum.
double functional_equation_residual(const ModularPoly& phi, const mp::Complex& tau);

} // namespace modcm
