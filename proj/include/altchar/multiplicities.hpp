#pragma once

#include <cstdint>
#include <vector>

#include "altchar/bigint.hpp"
#include "altchar/characters.hpp"
#include "altchar/partition.hpp"

namespace altchar {

/// Multiplicities of the eigenvalues ζ_m^0, ..., ζ_m^{m-1} of an element
/// of order m.
struct MultiplicityVector {
    std::int64_t m = 1;
    std::vector<BigInt> entries;

    BigInt total() const;
    bool all_positive() const;
};

/// a^λ_{μ,i}: the multiplicity of ζ_m^i as an eigenvalue of w_μ on V_λ,
/// m = lcm(μ). The character sum is grouped by d = gcd(j, m) into Ramanujan
/// sums, so no roots of unity are evaluated.
BigInt sn_multiplicity(const Partition& lambda, const Partition& mu, std::int64_t i);
MultiplicityVector sn_multiplicity_vector(const Partition& lambda, const Partition& mu);

/// Same quantity through an independent route: powers of explicit
/// permutations and reduction of Σ_j χ(w^j) x^{-ij mod m} modulo the m-th
/// cyclotomic polynomial, which must leave the constant m·a_i.
BigInt sn_multiplicity_oracle(const Partition& lambda, const Partition& mu, std::int64_t i);

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
std::vector<BigInt> cyclotomic_polynomial(std::int64_t m);

/// Which root-of-unity orientation the closed form for the bias follows.
/// `Defining` matches a^{λ+} - a^{λ-} as eigenvalue multiplicities
/// (sum over ζ^{-il}); `Conjugated` is the ζ^{+il} orientation, which
/// differs by the factor ∏_{j<=s} (-1 | p_j).
enum class BiasOrientation { Defining, Conjugated };

/// Per-prime data for the bias: i ≡ u·p^d (mod p^f) with p ∤ u.
struct BiasPrimeCondition {
    std::int64_t p = 0;
    int e = 0;
    int f = 0;
    int d = 0;
    std::int64_t u = 0;
    bool odd_exponent = false;
    bool satisfied = false;
};

struct BiasResult {
    std::int64_t value = 0;         // signed d
    std::int64_t abs_formula = 0;   // |d| from the magnitude formula
    std::vector<BiasPrimeCondition> conditions;
    bool nonzero = false;
};

/// d^{φ(μ)}_{μ,i} = a^{φ(μ)+}_{μ,i} - a^{φ(μ)-}_{μ,i} at the Plus class of
/// μ, in closed form. Throws std::invalid_argument unless μ has distinct
/// odd parts.
BiasResult bias(const Partition& mu, std::int64_t i,
                BiasOrientation orientation = BiasOrientation::Defining);

/// Floating-point evaluation of (√(εM)/m) Σ_{l ∈ (Z/m)^*} (l | M) ζ_m^{-il}.
/// Throws InternalError if the sum is more than 1e-6 from an integer.
std::int64_t bias_oracle(const Partition& mu, std::int64_t i);

/// Which formula an_multiplicity used.
enum class AnMultiplicityCase {
    Unsplit,      // V is the restriction of a non-self-conjugate V_λ
    SplitBiased,  // λ = φ(μ): (a ± d)/2
    SplitHalved,  // a/2
};

AnMultiplicityCase an_multiplicity_case(const AnIrrep& v, const AnClass& c);

/// Multiplicity of ζ_m^i as an eigenvalue of an element of C acting on V.
BigInt an_multiplicity(const AnIrrep& v, const AnClass& c, std::int64_t i);
MultiplicityVector an_multiplicity_vector(const AnIrrep& v, const AnClass& c);

/// Eigenvalue multiplicity from the A_n character values at the powers of
/// an explicit representative, with split classes of powers resolved by
/// conjugator parity. Floating point; throws InternalError if the result is
/// more than 1e-6 from a non-negative integer.
std::int64_t an_multiplicity_oracle(const AnIrrep& v, const AnClass& c, std::int64_t i);
std::vector<std::int64_t> an_multiplicity_oracle_vector(const AnIrrep& v, const AnClass& c);

enum class PowerClass { Same, Swapped };

/// Whether w_μ^i lies in the same A_n class as w_μ, for μ with distinct odd
/// parts and gcd(i, m) = 1: Same iff (i | M) = 1. Throws
/// std::invalid_argument otherwise.
PowerClass power_conjugacy(const Partition& mu, std::int64_t i);

}  // namespace altchar
