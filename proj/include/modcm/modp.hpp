#pragma once

// Polynomial arithmetic over F_p for word-sized primes p < 2^63. Used for
// exact-sound filters (a constant gcd mod p rules out a common factor over Q)
// and for factor-degree patterns in irreducibility proofs.

#include "modcm/poly.hpp"

#include <cstdint>
#include <vector>

namespace modcm::modp {

using Poly = std::vector<std::uint64_t>;

class Field {
  public:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(const mpz_class& x) const;

    Poly reduce(const ZPoly& f) const;
    void trim(Poly& f) const;

    Poly rem(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const;
    Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) const;
    /// Monic gcd.
    Poly gcd(const Poly& a, const Poly& b) const;
    Poly derivative(const Poly& f) const;
    Poly divide(const Poly& a, const Poly& b) const;
    std::uint64_t eval(const Poly& f, std::uint64_t x) const;
    std::uint64_t resultant(Poly f, Poly g) const;
    Poly interpolate_consecutive(const std::vector<std::uint64_t>& values) const;

    /// Degrees of the irreducible factors of a squarefree f (distinct-degree
    /// factorization followed by the degree split). Empty if f is not squarefree.
    std::vector<int> factor_degrees(const Poly& f) const;

  private:
    std::uint64_t p_;
};

/// A fixed ladder of 61-62 bit primes used by filters.
std::uint64_t large_prime(int index);

} // namespace modcm::modp
