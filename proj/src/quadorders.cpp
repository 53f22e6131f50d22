#include "modcm/quadorders.hpp"

#include "modcm/arith.hpp"
#include "modcm/errors.hpp"
#include "modcm/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace modcm {

bool is_negative_discriminant(std::int64_t D)
{
    if (D >= 0)
        return false;
    const std::int64_t r = mod_floor(D, 4);
    return r == 0 || r == 1;
}

bool is_fundamental_discriminant(std::int64_t d)
{
    if (d == 0 || d == 1)
        return false;
    const std::int64_t r = mod_floor(d, 4);
    if (r == 1)
        return is_squarefree(d);
    if (r == 0) {
        const std::int64_t m = d / 4;
        const std::int64_t m4 = mod_floor(m, 4);
        return (m4 == 2 || m4 == 3) && is_squarefree(m);
    }
    return false;
}

OrderDisc make_order(std::int64_t fundamental, std::int64_t conductor)
{
    if (fundamental >= 0)
        throw InvalidArgument("fundamental discriminant must be negative, got " + std::to_string(fundamental));
    if (!is_fundamental_discriminant(fundamental))
        throw InvalidArgument("not a fundamental discriminant: " + std::to_string(fundamental));
    if (conductor <= 0)
        throw InvalidArgument("conductor must be positive, got " + std::to_string(conductor));
    if (conductor > 3037000499 / 4)
        throw InvalidArgument("conductor too large: " + std::to_string(conductor));
    return {fundamental, conductor, conductor * conductor * fundamental};
}

OrderDisc order_from_disc(std::int64_t D)
{
    if (!is_negative_discriminant(D))
        throw InvalidArgument("not a negative discriminant (need D < 0, D = 0 or 1 mod 4): " + std::to_string(D));
    std::int64_t f = 1;
    std::int64_t d = D;
    for (auto [p, e] : factorize(D)) {
        for (int k = 0; k + 1 < e; k += 2) {
            const std::int64_t q = d / (p * p);
            // Only strip p^2 if what remains is still a discriminant.
            if (d % (p * p) == 0 && is_negative_discriminant(q)) {
                d = q;
                f *= p;
            }
        }
    }
    return {d, f, D};
}

std::vector<std::int64_t> discriminants_up_to(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    for (std::int64_t m = 3; m <= bound; ++m)
        if (is_negative_discriminant(-m))
            out.push_back(-m);
    return out;
}

bool QuadForm::is_reduced() const
{
    const std::int64_t ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

bool QuadForm::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

std::string to_string(const QuadForm& q)
{
    return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + ")";
}

QuadForm reduce(QuadForm q)
{
    if (q.a <= 0 || q.discriminant() >= 0)
        throw InvalidArgument("reduce expects a positive definite form, got " + to_string(q));
    while (true) {
        if (q.b > q.a || q.b <= -q.a) {
            // x -> x + k y with k = floor((a - b) / 2a) puts b into (-a, a].
            const std::int64_t two_a = 2 * q.a;
            std::int64_t num = q.a - q.b;
            std::int64_t k = num >= 0 ? num / two_a : -((-num + two_a - 1) / two_a);
            const __int128 c = static_cast<__int128>(q.a) * k * k + static_cast<__int128>(q.b) * k + q.c;
            q.b += two_a * k;
            q.c = static_cast<std::int64_t>(c);
        }
        if (q.a > q.c) {
            q = {q.c, -q.b, q.a};
            continue;
        }
        if (q.a == q.c && q.b < 0)
            q.b = -q.b;
        return q;
    }
}

QuadForm principal_form(std::int64_t D)
{
    if (!is_negative_discriminant(D))
        throw InvalidArgument("not a negative discriminant: " + std::to_string(D));
    const std::int64_t b = (D & 1) ? 1 : 0;
    return {1, b, (b - D) / 4};
}

QuadForm compose(const QuadForm& q1, const QuadForm& q2)
{
    const std::int64_t D = q1.discriminant();
    if (q2.discriminant() != D)
        throw InvalidArgument("compose: discriminant mismatch " + std::to_string(D) + " vs " +
                              std::to_string(q2.discriminant()));
    QuadForm f1 = q1, f2 = q2;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    const std::int64_t s = (f1.b + f2.b) / 2;
    const std::int64_t n = f2.b - s;

    std::int64_t y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        XGcd e = xgcd(f2.a, f1.a); // u a2 + v a1 = d
        y1 = e.x;
        d = e.g;
    }
    std::int64_t x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        XGcd e = xgcd(s, d); // x2 s + y2 d = d1
        x2 = e.x;
        y2 = -e.y;
        d1 = e.g;
    }
    const std::int64_t v1 = f1.a / d1;
    const std::int64_t v2 = f2.a / d1;
    __int128 r = (static_cast<__int128>(y1) * y2 % v1) * n - static_cast<__int128>(x2) * f2.c;
    r %= v1;
    if (r < 0)
        r += v1;
    const __int128 b3 = f2.b + 2 * static_cast<__int128>(v2) * r;
    const __int128 a3 = static_cast<__int128>(v1) * v2;
    const __int128 c3 = (b3 * b3 - D) / (4 * a3);
    return reduce({static_cast<std::int64_t>(a3), static_cast<std::int64_t>(b3), static_cast<std::int64_t>(c3)});
}

QuadForm inverse(const QuadForm& q)
{
    return reduce({q.a, -q.b, q.c});
}

std::vector<QuadForm> reduced_forms(const OrderDisc& order)
{
    const std::int64_t D = order.disc;
    if (!is_negative_discriminant(D))
        throw InvalidArgument("not a negative discriminant: " + std::to_string(D));
    std::vector<QuadForm> out;
    const std::int64_t absD = -D;
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        const std::int64_t four_a = 4 * a;
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - D) & 1) != 0)
                continue;
            const std::int64_t num = b * b - D;
            if (num % four_a != 0)
                continue;
            const std::int64_t c = num / four_a;
            if (c < a || (a == c && b < 0))
                continue;
            if (gcd(gcd(a, b), c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

std::int64_t class_number(const OrderDisc& order)
{
    return static_cast<std::int64_t>(reduced_forms(order).size());
}

int two_rank(const OrderDisc& order)
{
    std::int64_t ambiguous = 0;
    for (const auto& q : reduced_forms(order))
        if (inverse(q) == q)
            ++ambiguous;
    int rank = 0;
    while ((std::int64_t{1} << rank) < ambiguous)
        ++rank;
    if ((std::int64_t{1} << rank) != ambiguous)
        throw DegenerateError("ambiguous class count is not a power of two for D = " + std::to_string(order.disc));
    return rank;
}

int unit_count(std::int64_t D)
{
    if (D == -3)
        return 6;
    if (D == -4)
        return 4;
    return 2;
}

double class_number_estimate(std::int64_t D, int periods)
{
    if (!is_negative_discriminant(D))
        throw InvalidArgument("not a negative discriminant: " + std::to_string(D));
    const std::int64_t P = -D;
    std::vector<std::int32_t> table(static_cast<std::size_t>(P));
    for (std::int64_t r = 0; r < P; ++r)
        table[static_cast<std::size_t>(r)] = kronecker(D, r);
    const auto sums = kernels::character_sums(table, static_cast<std::uint32_t>(periods));
    const double N = static_cast<double>(periods) * static_cast<double>(P);
    const double L = sums.reciprocal + sums.mean_partial / (N + 1.0);
    return unit_count(D) / (2.0 * std::numbers::pi) * std::sqrt(static_cast<double>(P)) * L;
}

ClassGroupSummary summarize_class_group(const OrderDisc& order)
{
    ClassGroupSummary s;
    s.order = order;
    s.forms = reduced_forms(order);
    s.h = static_cast<std::int64_t>(s.forms.size());
    s.two_rank = two_rank(order);
    s.odd_primes = odd_prime_divisor_count(order.disc);
    s.two_rank_bound_holds = s.two_rank <= s.odd_primes + 10;
    return s;
}

FormClassGroup::FormClassGroup(const OrderDisc& order) : order_(order), elements_(reduced_forms(order))
{
    const QuadForm one = principal_form(order.disc);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == one) {
            std::swap(elements_[0], elements_[i]);
            break;
        }
    for (std::size_t i = 0; i < elements_.size(); ++i)
        index_.emplace(elements_[i], i);
}

std::size_t FormClassGroup::index_of(const QuadForm& q) const
{
    if (q.discriminant() != order_.disc)
        throw InvalidArgument("form " + to_string(q) + " has the wrong discriminant for this group");
    auto it = index_.find(reduce(q));
    if (it == index_.end())
        throw InvalidArgument("form " + to_string(q) + " is not primitive");
    return it->second;
}

std::size_t FormClassGroup::compose(std::size_t i, std::size_t j) const
{
    return index_.at(modcm::compose(elements_[i], elements_[j]));
}

std::size_t FormClassGroup::inverse(std::size_t i) const
{
    return index_.at(modcm::inverse(elements_[i]));
}

} // namespace modcm
