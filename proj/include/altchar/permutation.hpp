#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altchar/partition.hpp"

namespace altchar {

/// A bijection of {0, ..., n-1}, stored as its list of images.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);

    /// Cycles laid out consecutively in part order: the first cycle is
    /// (0 1 ... μ_1-1), the next starts at μ_1, and so on.
    static Permutation standard_rep(const Partition& mu);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// (σ∘τ)(x) = σ(τ(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
Permutation power(const Permutation& sigma, std::int64_t k);

/// ρσρ⁻¹.
Permutation conjugate_by(const Permutation& sigma, const Permutation& rho);

int sign(const Permutation& sigma);
Partition cycle_type(const Permutation& sigma);

/// Some ρ with ρσρ⁻¹ = τ, or nullopt if the cycle types differ.
/// Throws std::invalid_argument on degree mismatch.
std::optional<Permutation> conjugator(const Permutation& sigma, const Permutation& tau);

}  // namespace altchar
