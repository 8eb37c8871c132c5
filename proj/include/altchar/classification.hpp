#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altchar/characters.hpp"
#include "altchar/partition.hpp"

namespace altchar {

/// An exception rule with a stable identifier, e.g. "an-invariant.3".
struct ExceptionRule {
    std::string id;
    std::string description;

    friend bool operator==(const ExceptionRule&, const ExceptionRule&) = default;
};

// These predicates are transcriptions of the classification results; they
// never consult the multiplicity engine.

/// The rule under which w_μ has no non-zero fixed vector in V_λ, if any.
/// Throws std::invalid_argument if |λ| != |μ|.
std::optional<ExceptionRule> sn_invariant_exception(const Partition& lambda, const Partition& mu);
bool has_invariant_sn(const Partition& lambda, const Partition& mu);

/// Same for A_n. The answer does not depend on split tags.
std::optional<ExceptionRule> an_invariant_exception(const AnIrrep& v, const AnClass& c);
bool has_invariant_an(const AnIrrep& v, const AnClass& c);

std::optional<ExceptionRule> sn_unisingular_exception(const Partition& lambda);
std::optional<ExceptionRule> an_unisingular_exception(const AnIrrep& v);
bool unisingular_sn(const Partition& lambda);
bool unisingular_an(const AnIrrep& v);

struct SwansonException {
    Partition lambda;
    std::int64_t i = 0;
    std::string rule;

    friend bool operator==(const SwansonException&, const SwansonException&) = default;
};

/// Pairs (λ, i) for which ζ_n^i is not an eigenvalue of an n-cycle on V_λ,
/// sorted by (λ descending, i ascending). n >= 2.
std::vector<SwansonException> swanson_exceptions(int n);

/// Every exception rule, for export.
std::vector<ExceptionRule> sn_invariant_rules();
std::vector<ExceptionRule> an_invariant_rules();
std::vector<ExceptionRule> sn_unisingular_rules();
std::vector<ExceptionRule> an_unisingular_rules();
std::vector<ExceptionRule> swanson_rules();

/// True iff every m-th root of unity is an eigenvalue, i.e. the minimal
/// polynomial is x^m - 1. Uses the multiplicity engine.
bool full_minimal_polynomial_sn(const Partition& lambda, const Partition& mu);
bool full_minimal_polynomial_an(const AnIrrep& v, const AnClass& c);

}  // namespace altchar
