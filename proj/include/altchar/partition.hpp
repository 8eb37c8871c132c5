#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "altchar/bigint.hpp"

namespace altchar {

/// A weakly decreasing sequence of positive integers.
///
/// Partitions index both the irreducible representations and the conjugacy
/// classes of the symmetric group; `n()` is the integer being partitioned.
/// The empty partition (n = 0) is representable but most operations on
/// groups reject it.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing and
    /// strictly positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and validates arbitrary positive parts.
    static Partition from_unsorted(std::vector<int> parts);

    /// Parses "5,3,1". Whitespace around parts is tolerated.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int n() const noexcept { return n_; }

    /// Zero-based; returns 0 past the last part.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Multiplicity of `part` among the parts.
    int multiplicity(int part) const noexcept;

    bool has_distinct_odd_parts() const noexcept;
    bool all_parts_odd() const noexcept;
    int count_even_parts() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// (a_1 > ... > a_d | b_1 > ... > b_d), a_i = λ_i - i and b_i = λ'_i - i
/// with one-based i.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;

    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

FrobeniusCoords to_frobenius(const Partition& lambda);

/// Throws std::invalid_argument on unequal lengths, negative entries or
/// sequences that are not strictly decreasing.
Partition from_frobenius(const FrobeniusCoords& coords);

/// Self-conjugate partition whose diagonal hooks have lengths μ_1, ..., μ_k.
/// Throws std::invalid_argument unless μ has distinct odd parts.
Partition phi(const Partition& mu);

/// Inverse of `phi`: the diagonal hook lengths of a self-conjugate partition.
Partition diagonal_hooks(const Partition& lambda);

/// Hook length of cell (row, col), both zero-based.
int hook_length(const Partition& lambda, int row, int col);

/// Number of standard Young tableaux of shape λ (hook length formula).
BigInt dimension(const Partition& lambda);

/// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// Partitions of n with distinct odd parts, decreasing lexicographic order.
std::vector<Partition> distinct_odd_partitions_of(int n);

}  // namespace altchar
