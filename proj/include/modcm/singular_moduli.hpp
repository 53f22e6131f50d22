#pragma once

// The modular j-function, Hilbert class polynomials, and the class-group
// action on CM j-invariants.

#include "modcm/mp.hpp"
#include "modcm/poly.hpp"
#include "modcm/quadorders.hpp"

#include <vector>

namespace modcm {

/// Extra bits carried internally by j_eval beyond the requested precision.
inline constexpr mp::Precision kJGuardBits = 32;
/// Default ceiling on any requested working precision.
inline constexpr mp::Precision kDefaultPrecisionCeiling = 1 << 18;

/// tau = (-b + i sqrt|D|) / 2a.
mp::Complex tau_of_form(const QuadForm& q, mp::Precision prec);

/// Moves tau into the closed standard fundamental domain by translations and
/// tau -> -1/tau. Throws InvalidArgument if Im tau <= 0.
mp::Complex reduce_to_fundamental_domain(const mp::Complex& tau);

/// j(tau) = E4^3 / Delta from q-expansions at the reduced point. The relative
/// error is below 2^(-prec + 8) for prec >= 64.
mp::Complex j_eval(const mp::Complex& tau, mp::Precision prec,
                   mp::Precision ceiling = kDefaultPrecisionCeiling);

struct HilbertClassPoly {
    OrderDisc order;
    /// Monic, low to high, degree h(D).
    ZPoly coeffs;
    mp::Precision precision = 0;
    /// Largest distance of a computed coefficient from its rounded integer.
    double max_residual = 0.0;
};

struct HilbertOptions {
    int max_retries = 4;
    mp::Precision ceiling = kDefaultPrecisionCeiling;
};

/// 32 + ceil((pi sqrt|D| / ln 2) * sum over reduced forms of 1/a).
mp::Precision hilbert_initial_precision(const OrderDisc& order);

/// prod over reduced forms Q of (X - j(tau_Q)), rounded to integers. Doubles the
/// precision on a residual >= 0.25 and throws PrecisionError after max_retries.
HilbertClassPoly hilbert_class_poly(const OrderDisc& order, const HilbertOptions& options = {});

/// A root of H_D together with the reduced form indexing it.
struct CMJInvariant {
    OrderDisc order;
    QuadForm form;
    mp::Complex value;
};

CMJInvariant cm_j_invariant(const OrderDisc& order, const QuadForm& form, mp::Precision prec);
/// One entry per reduced form, in reduced_forms order.
std::vector<CMJInvariant> cm_j_invariants(const OrderDisc& order, mp::Precision prec);

/// The class [q] sends the point indexed by the form P to the point indexed
/// by inverse(q) * P (tensoring the lattice by the ideal class). The value is
/// recomputed from the new form at the precision of x.
CMJInvariant torsor_act(const QuadForm& q, const CMJInvariant& x);

struct TorsorReport {
    OrderDisc order;
    std::int64_t h = 0;
    /// Every root of H_D is reached from the principal point.
    bool transitive = false;
    /// Distinct classes give distinct roots.
    bool free = false;
    /// torsor_act(Q, torsor_act(R, x)) = torsor_act(QR, x) on the tested pairs.
    bool action_law = false;
    /// Worst log2 relative distance between an acted point and its matched root.
    double log2_worst_match = 0.0;
};

/// Checks the class-group action against roots of H_D found independently by
/// root finding. Matches must agree to 2^-(prec/2).
TorsorReport check_torsor(const OrderDisc& order, mp::Precision prec = 256);

} // namespace modcm
