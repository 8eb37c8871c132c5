#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altchar/bigint.hpp"
#include "altchar/characters.hpp"
#include "altchar/partition.hpp"
#include "altchar/permutation.hpp"

namespace altchar {

struct IrrepMultiplicity {
    AnIrrep irrep;
    BigInt multiplicity;
};

/// Whether the A_n class(es) of cycle type μ are global: the conjugation
/// action contains every irreducible.
struct GlobalVerdict {
    Partition mu;
    bool in_scope = true;            // μ meets the closed-form hypothesis
    std::optional<bool> is_global;   // absent when out of scope
    std::string rule;
    std::optional<IrrepMultiplicity> witness;       // brute force: minimal inner product
    std::vector<IrrepMultiplicity> inner_products;  // brute force only
    BigInt centralizer_order = 0;                   // brute force only, |Z_{A_n}|
};

/// μ with at least two parts, all odd, none appearing three or more times.
bool within_global_hypothesis(const Partition& mu);

/// Closed-form verdict: global except for (3,1), (3,3), (5,3), (3,3,1,1).
GlobalVerdict is_global_class(const Partition& mu);

inline constexpr int kDefaultGlobalBound = 11;

/// Calls `visit` on every element of the S_n centralizer of
/// standard_rep(μ), generated from cycle rotations and swaps of equal-length
/// cycles.
void for_each_centralizer_element(const Partition& mu,
                                  const std::function<void(const Permutation&)>& visit);

/// Enumerate walks the centralizer element by element. Census counts cycle
/// types combinatorially and splits each split class evenly, which is only
/// valid when μ does not have distinct odd parts. Auto enumerates small
/// centralizers and falls back to the census.
enum class CentralizerMethod { Auto, Enumerate, Census };

/// Inner products ⟨Ind_Z^{A_n} 1, χ⟩ = (1/|Z|) Σ_{x ∈ Z} χ(x) for the
/// centralizer Z of standard_rep(μ) in A_n. Throws BoundExceeded if
/// |μ| > bound, std::invalid_argument if w_μ is odd.
GlobalVerdict global_brute_force(const Partition& mu, int bound = kDefaultGlobalBound,
                                 CentralizerMethod method = CentralizerMethod::Auto);

/// Number of elements of each cycle type in the S_n centralizer of w_μ,
/// counted without enumerating it: in C_k ≀ S_m, a cycle of length c of the
/// top permutation with total rotation r becomes gcd(r,k) cycles of length
/// ck/gcd(r,k), and each r is hit k^(c-1) times.
std::map<Partition, BigInt> centralizer_cycle_types(const Partition& mu);

/// S_n analogue, used to check the symmetric-group classification. Works
/// from centralizer_cycle_types, so large centralizers are cheap.
bool sn_global_brute_force(const Partition& mu);

/// Plus iff σ is conjugate to standard_rep(cycle_type(σ)) by an even
/// permutation. Throws std::invalid_argument unless the cycle type has
/// distinct odd parts.
ClassTag split_class_of(const Permutation& sigma);

/// The A_n class containing σ (σ must be even).
AnClass an_class_of(const Permutation& sigma);

/// A concrete element of the class: standard_rep for Plus and Unsplit, its
/// conjugate by (0 1) for Minus.
Permutation representative(const AnClass& c);

}  // namespace altchar
