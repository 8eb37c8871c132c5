#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/rational.hpp>

namespace altchar {

using Rational = boost::rational<std::int64_t>;

/// Jacobi symbol (a | n). Throws std::domain_error unless n is odd and
/// positive. (a | 1) = 1 for every a.
int jacobi(std::int64_t a, std::int64_t n);

bool is_prime(std::int64_t x);
bool is_square(std::int64_t x);
bool is_square_free(std::int64_t x);

/// Euler's totient.
std::int64_t totient(std::int64_t q);

/// Möbius function.
int moebius(std::int64_t q);

/// Σ_{l ∈ (Z/p^f)^*} ζ_{p^f}^{il} for an odd prime p and f >= 1.
std::int64_t unit_sum(std::int64_t p, int f, std::int64_t i);

/// Ramanujan sum c_q(i) = Σ_{l ∈ (Z/q)^*} ζ_q^{il}, via
/// c_q(i) = μ(q/g) φ(q) / φ(q/g) with g = gcd(q, i).
std::int64_t ramanujan(std::int64_t q, std::int64_t i);

/// An exact number rational_factor · i^quarter_turns · √radicand.
///
/// Normalised so that radicand is square-free and positive and
/// quarter_turns is 0 or 1; i² = -1 is folded into the rational factor. Zero is
/// represented by rational_factor = 0, radicand = 1, quarter_turns = 0.
class GaussPhase {
public:
    GaussPhase() = default;
    GaussPhase(Rational factor, int quarter_turns, std::int64_t radicand);

    static GaussPhase integer(std::int64_t k) { return GaussPhase(Rational(k), 0, 1); }
    static GaussPhase zero() { return GaussPhase(Rational(0), 0, 1); }

    const Rational& rational_factor() const noexcept { return factor_; }
    int quarter_turns() const noexcept { return turns_; }
    std::int64_t radicand() const noexcept { return radicand_; }
    bool is_zero() const noexcept { return factor_.numerator() == 0; }

    double real() const;
    double imag() const;
    std::string to_string() const;

    friend GaussPhase operator*(const GaussPhase& x, const GaussPhase& y);
    friend bool operator==(const GaussPhase&, const GaussPhase&) = default;

private:
    void normalize();

    Rational factor_{0};
    int turns_ = 0;
    std::int64_t radicand_ = 1;
};

/// Classical quadratic Gauss sum of an odd prime: √p if p ≡ 1 (mod 4),
/// i√p if p ≡ 3 (mod 4).
GaussPhase gauss_sum(std::int64_t p);

/// Σ_{l ∈ (Z/p^f)^*} (l | p) ζ_{p^f}^{il} for an odd prime p and f >= 1:
/// p^{f-1} (u | p) g(p) when i ≡ u p^{f-1} (mod p^f) with p ∤ u, else 0.
GaussPhase twisted_sum(std::int64_t p, int f, std::int64_t i);

GaussPhase phase_product(std::span<const GaussPhase> factors);

/// The signed integer a GaussPhase equals. Throws InternalError when the
/// value is not real, not rational, or not integral.
std::int64_t phase_to_integer(const GaussPhase& x);

}  // namespace altchar
