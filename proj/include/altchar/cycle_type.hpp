#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "altchar/bigint.hpp"
#include "altchar/partition.hpp"

namespace altchar {

struct PrimeExponents {
    std::int64_t p = 0;
    int e = 0;  // exponent in the product of the parts
    int f = 0;  // exponent in the lcm of the parts, 0 < f <= e

    friend bool operator==(const PrimeExponents&, const PrimeExponents&) = default;
};

/// Arithmetic data attached to a cycle type μ.
///
/// `primes` lists the prime divisors of `product` with odd exponent first
/// (ascending), then those with even exponent (ascending); the first
/// `odd_exponent_count` entries are the odd-exponent ones.
struct CycleTypeData {
    Partition mu;
    std::int64_t product = 1;  // M
    std::int64_t order = 1;    // m = lcm of the parts
    std::vector<PrimeExponents> primes;
    int odd_exponent_count = 0;  // s
    std::optional<int> epsilon;  // (-1)^{Σ(μ_j-1)/2}, only for distinct odd parts
};

CycleTypeData cycle_type_data(const Partition& mu);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Floor-mod into [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// z_μ = ∏ k^{m_k} m_k!, the order of the centralizer of w_μ in S_n.
BigInt centralizer_order_sn(const Partition& mu);

/// Size of the S_n conjugacy class of cycle type μ.
BigInt class_size_sn(const Partition& mu);

/// +1 or -1: the sign of any permutation of cycle type μ.
int cycle_type_sign(const Partition& mu);

/// True iff w_μ is an even permutation (even number of even parts).
bool in_alternating_group(const Partition& mu);

/// Cycle type of w_μ^d without building a permutation: a part μ_t breaks
/// into gcd(μ_t, d) cycles of length μ_t / gcd(μ_t, d).
Partition power_cycle_type(const Partition& mu, std::int64_t d);

}  // namespace altchar
