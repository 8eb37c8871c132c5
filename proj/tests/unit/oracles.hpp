#pragma once

// Slow, independent reference computations used only by the tests. None of
// these call into the library routines they are compared against.

#include <complex>
#include <cstdint>
#include <vector>

#include "altchar/bigint.hpp"
#include "altchar/partition.hpp"
#include "altchar/permutation.hpp"

namespace oracle {

using Complex = std::complex<double>;

Complex root_of_unity(std::int64_t k, std::int64_t m);

/// Every element of S_n, by std::next_permutation.
std::vector<altchar::Permutation> symmetric_group(int n);

/// Inversion count parity, +1 or -1.
int sign_by_inversions(const std::vector<int>& images);

/// f^λ by the branching rule f(λ) = Σ over removable corners f(λ - corner).
altchar::BigInt dimension_by_corners(const altchar::Partition& lambda);

/// Column lengths read off the Young diagram cell by cell.
altchar::Partition conjugate_by_cells(const altchar::Partition& lambda);

/// Number of σ in S_n commuting with standard_rep(μ), by scanning S_n.
long centralizer_count(const altchar::Partition& mu);

/// Legendre symbol from the list of squares mod p.
int legendre_by_squares(std::int64_t a, std::int64_t p);

/// Jacobi symbol as a product of Legendre symbols over the factorization.
int jacobi_by_factors(std::int64_t a, std::int64_t n);

/// Σ_{gcd(l,q)=1} ζ_q^{il}, summed in floating point.
Complex unit_sum(std::int64_t q, std::int64_t i);

/// Σ_{gcd(l,p)=1, l < p^f} (l|p) ζ_{p^f}^{il}, summed in floating point.
Complex twisted_sum(std::int64_t p, int f, std::int64_t i);

/// χ_λ(w_μ) by the Frobenius alternant formula: the coefficient of
/// x^{λ+δ} in a_δ · p_μ. Exponential in ℓ(λ); keep n small.
long frobenius_character(const altchar::Partition& lambda, const altchar::Partition& mu);

/// Eigenvalue multiplicity of ζ_m^i for w_μ on V_λ, as the average of
/// χ(w^j) ζ_m^{-ij} with the powers built as explicit permutations and
/// characters from frobenius_character.
double numeric_multiplicity(const altchar::Partition& lambda, const altchar::Partition& mu,
                            std::int64_t i);

/// Sign of the permutation x -> i·x on Z/M (gcd(i, M) = 1).
int multiplication_sign(std::int64_t i, std::int64_t M);

/// Whether some even permutation conjugates σ to τ, by scanning A_n.
bool even_conjugator_exists(const altchar::Permutation& sigma, const altchar::Permutation& tau);

}  // namespace oracle
