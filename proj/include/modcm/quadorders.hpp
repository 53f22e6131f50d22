#pragma once

// Imaginary quadratic orders and their class groups, realized by reduced
// primitive binary quadratic forms a x^2 + b x y + c y^2 of discriminant
// D = b^2 - 4ac < 0.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace modcm {

/// The order of discriminant disc = conductor^2 * fundamental.
struct OrderDisc {
    std::int64_t fundamental = -4;
    std::int64_t conductor = 1;
    std::int64_t disc = -4;

    friend bool operator==(const OrderDisc&, const OrderDisc&) = default;
};

bool is_fundamental_discriminant(std::int64_t d);
/// True for D < 0 with D = 0 or 1 mod 4.
bool is_negative_discriminant(std::int64_t D);

/// Validates d_K (negative, fundamental) and f >= 1.
OrderDisc make_order(std::int64_t fundamental, std::int64_t conductor);
/// Splits an arbitrary negative discriminant as f^2 d_K.
OrderDisc order_from_disc(std::int64_t D);

/// All negative discriminants with |D| <= bound, ordered by |D| ascending.
std::vector<std::int64_t> discriminants_up_to(std::int64_t bound);

struct QuadForm {
    std::int64_t a = 1, b = 0, c = 1;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    /// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
    bool is_reduced() const;
    bool is_primitive() const;

    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

std::string to_string(const QuadForm& q);

/// Canonical reduced representative of the SL2(Z) class of a positive definite form.
QuadForm reduce(QuadForm q);
QuadForm principal_form(std::int64_t D);
/// Reduced form of the product class. Throws InvalidArgument on mismatched discriminants.
QuadForm compose(const QuadForm& q1, const QuadForm& q2);
/// Reduction of the opposite form (a, -b, c).
QuadForm inverse(const QuadForm& q);

/// Every reduced primitive form of discriminant order.disc, sorted by (a, b).
std::vector<QuadForm> reduced_forms(const OrderDisc& order);
std::int64_t class_number(const OrderDisc& order);
/// Dimension over F_2 of Pic / Pic^2, from the count of ambiguous classes.
int two_rank(const OrderDisc& order);

/// Number of roots of unity in the order: 6 for D = -3, 4 for D = -4, else 2.
int unit_count(std::int64_t D);

/// h(D) ~ (w/2pi) sqrt|D| L(1, chi_D), with L(1, chi_D) from a truncated
/// character sum over `periods` full periods plus a mean-value tail correction.
double class_number_estimate(std::int64_t D, int periods = 16);

/// What the classgroup command reports.
struct ClassGroupSummary {
    OrderDisc order;
    std::vector<QuadForm> forms;
    std::int64_t h = 0;
    int two_rank = 0;
    /// Distinct odd primes dividing D.
    int odd_primes = 0;
    /// two_rank <= odd_primes + 10
    bool two_rank_bound_holds = false;
};

ClassGroupSummary summarize_class_group(const OrderDisc& order);

/// Explicit group: elements indexed 0..h-1 with the principal form at index 0.
class FormClassGroup {
  public:
    explicit FormClassGroup(const OrderDisc& order);

    const OrderDisc& order() const { return order_; }
    const std::vector<QuadForm>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    /// Index of the class of q (q need not be reduced).
    std::size_t index_of(const QuadForm& q) const;
    std::size_t compose(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;

  private:
    OrderDisc order_;
    std::vector<QuadForm> elements_;
    std::map<QuadForm, std::size_t> index_;
};

} // namespace modcm
