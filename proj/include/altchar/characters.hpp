#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "altchar/bigint.hpp"
#include "altchar/partition.hpp"
#include "altchar/quad_value.hpp"

namespace altchar {

/// χ_λ(w_μ) by the Murnaghan–Nakayama rule. Rim hooks are removed on the
/// beta-set of λ, largest part of μ first, memoised on (λ, remaining μ).
/// Thread-safe. Throws std::invalid_argument if |λ| != |μ|.
BigInt mn_character(const Partition& lambda, const Partition& mu);

enum class ClassTag { Unsplit, Plus, Minus };
enum class IrrepTag { Whole, Plus, Minus };

/// A conjugacy class of A_n: a cycle type with an even number of even parts,
/// plus a tag for the two classes a distinct-odd-part type splits into.
/// The Plus class contains Permutation::standard_rep(mu); the Minus class
/// is its conjugate by the transposition (0 1).
class AnClass {
public:
    /// Throws std::invalid_argument unless the cycle type lies in A_n and the
    /// tag is split exactly when the parts are distinct and odd.
    AnClass(Partition mu, ClassTag tag);

    /// "5,3:+", "3,3" (unsplit). Throws ParseError.
    static AnClass parse(std::string_view label);

    const Partition& mu() const noexcept { return mu_; }
    ClassTag tag() const noexcept { return tag_; }
    bool is_split() const noexcept { return tag_ != ClassTag::Unsplit; }
    int n() const noexcept { return mu_.n(); }

    std::string label() const;

    friend bool operator==(const AnClass&, const AnClass&) = default;

private:
    Partition mu_;
    ClassTag tag_;
};

/// An irreducible representation of A_n. Whole labels are stored as the
/// lexicographically larger of {λ, λ'}; Plus/Minus label the two halves of
/// a self-conjugate λ.
class AnIrrep {
public:
    /// Throws std::invalid_argument if the tag disagrees with self-conjugacy.
    AnIrrep(const Partition& lambda, IrrepTag tag);

    /// "4,4", "3,3,2:-". A missing tag on a self-conjugate label is an error.
    static AnIrrep parse(std::string_view label);

    const Partition& lambda() const noexcept { return lambda_; }
    IrrepTag tag() const noexcept { return tag_; }
    bool is_split() const noexcept { return tag_ != IrrepTag::Whole; }
    int n() const noexcept { return lambda_.n(); }

    std::string label() const;

    friend bool operator==(const AnIrrep&, const AnIrrep&) = default;

private:
    Partition lambda_;
    IrrepTag tag_;
};

struct AnClassInfo {
    AnClass cls;
    BigInt size;
};

struct AnIrrepInfo {
    AnIrrep irrep;
    BigInt dimension;
};

/// Classes of A_n (n >= 2) in decreasing lexicographic order of cycle type,
/// Plus before Minus.
std::vector<AnClassInfo> an_classes(int n);

/// Irreducibles of A_n (n >= 2) in decreasing lexicographic order of λ,
/// Plus before Minus.
std::vector<AnIrrepInfo> an_irreps(int n);

BigInt an_dimension(const AnIrrep& v);

/// Character value of V on C.
///
/// χ⁺_λ takes (ε_μ + √(ε_μ M))/2 on the Plus class of μ when λ = φ(μ),
/// with the principal square root; every other split value is χ_λ(w_μ)/2.
QuadValue an_character(const AnIrrep& v, const AnClass& c);

struct CharacterTable {
    int n = 0;
    std::vector<AnIrrepInfo> irreps;
    std::vector<AnClassInfo> classes;
    std::vector<std::vector<QuadValue>> values;  // [irrep][class]
};

inline constexpr int kDefaultTableBound = 14;

/// Throws BoundExceeded if n > bound.
CharacterTable character_table_an(int n, int bound = kDefaultTableBound);

}  // namespace altchar
