#include "altchar/classification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "altchar/cycle_type.hpp"
#include "altchar/multiplicities.hpp"

namespace altchar {

namespace {

/// (n - k, 1^k).
Partition hook(int n, int k) {
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(parts));
}

/// (2^twos, 1^ones).
Partition twos_and_ones(int twos, int ones) {
    std::vector<int> parts(static_cast<std::size_t>(twos), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
}

const std::vector<ExceptionRule>& sn_invariant_table() {
    static const std::vector<ExceptionRule> rules{
        {"sn-invariant.1", "sign representation (1^n) at any odd permutation"},
        {"sn-invariant.2", "(n-1,1) at an n-cycle, n >= 2"},
        {"sn-invariant.3", "(2,1^(n-2)) at an n-cycle, n >= 3 odd"},
        {"sn-invariant.4", "(2,2,1^(n-4)) at cycle type (n-2,2), n >= 5 odd"},
        {"sn-invariant.5", "(2,2) at cycle type (3,1)"},
        {"sn-invariant.6", "(2,2,2) at cycle type (3,2,1)"},
        {"sn-invariant.7", "(2,2,2,2) at cycle type (5,3)"},
        {"sn-invariant.8", "(4,4) at cycle type (5,3)"},
        {"sn-invariant.9", "(2,2,2,2,2) at cycle type (5,3,2)"},
    };
    return rules;
}

const std::vector<ExceptionRule>& an_invariant_table() {
    static const std::vector<ExceptionRule> rules{
        {"an-invariant.1", "(2,1):+/- at a 3-cycle"},
        {"an-invariant.2", "(2,2):+/- at cycle type (3,1)"},
        {"an-invariant.3", "(4,4) at cycle type (5,3)"},
        {"an-invariant.4", "(n-1,1) at an n-cycle, n > 3 odd"},
    };
    return rules;
}

const std::vector<ExceptionRule>& sn_unisingular_table() {
    static const std::vector<ExceptionRule> rules{
        {"sn-unisingular.1", "(1^n), n >= 2"},
        {"sn-unisingular.2", "(n-1,1), n >= 2"},
        {"sn-unisingular.3", "(2,1^(n-2)), n >= 3 odd"},
        {"sn-unisingular.4", "(2,2,1^(n-4)), n >= 5 odd"},
        {"sn-unisingular.5", "sporadic: (2,2), (2,2,2), (2,2,2,2), (4,4), (2,2,2,2,2)"},
    };
    return rules;
}

const std::vector<ExceptionRule>& an_unisingular_table() {
    static const std::vector<ExceptionRule> rules{
        {"an-unisingular.1", "(2,1):+/-"},
        {"an-unisingular.2", "(2,2):+/-"},
        {"an-unisingular.3", "(4,4)"},
        {"an-unisingular.4", "(n-1,1), n > 3 odd"},
    };
    return rules;
}

const std::vector<ExceptionRule>& swanson_table() {
    static const std::vector<ExceptionRule> rules{
        {"cycle-eigenvalue.1", "(2,2), i in {1,3}"},
        {"cycle-eigenvalue.2", "(2,2,2), i in {1,5}"},
        {"cycle-eigenvalue.3", "(3,3), i in {2,4}"},
        {"cycle-eigenvalue.4", "(2,1^(n-2)), i = 0 for odd n, i = n/2 for even n"},
        {"cycle-eigenvalue.5", "(n), every i != 0"},
        {"cycle-eigenvalue.6", "(1^n), i != 0 for odd n, i != n/2 for even n"},
        {"cycle-eigenvalue.7", "(n-1,1), i = 0"},
    };
    return rules;
}

void require_same_size(int a, int b) {
    if (a != b) throw std::invalid_argument("representation and class have different degrees");
}

}  // namespace

std::vector<ExceptionRule> sn_invariant_rules() { return sn_invariant_table(); }
std::vector<ExceptionRule> an_invariant_rules() { return an_invariant_table(); }
std::vector<ExceptionRule> sn_unisingular_rules() { return sn_unisingular_table(); }
std::vector<ExceptionRule> an_unisingular_rules() { return an_unisingular_table(); }
std::vector<ExceptionRule> swanson_rules() { return swanson_table(); }

std::optional<ExceptionRule> sn_invariant_exception(const Partition& lambda, const Partition& mu) {
    require_same_size(lambda.n(), mu.n());
    const int n = lambda.n();
    const auto& rules = sn_invariant_table();
    const Partition n_cycle{n};
    if (n >= 2 && lambda == hook(n, n - 1) && cycle_type_sign(mu) == -1) return rules[0];
    if (n >= 2 && lambda == hook(n, 1) && mu == n_cycle) return rules[1];
    if (n >= 3 && n % 2 == 1 && lambda == twos_and_ones(1, n - 2) && mu == n_cycle) return rules[2];
    if (n >= 5 && n % 2 == 1 && lambda == twos_and_ones(2, n - 4) && mu == Partition{n - 2, 2}) {
        return rules[3];
    }
    if (lambda == Partition{2, 2} && mu == Partition{3, 1}) return rules[4];
    if (lambda == Partition{2, 2, 2} && mu == Partition{3, 2, 1}) return rules[5];
    if (lambda == Partition{2, 2, 2, 2} && mu == Partition{5, 3}) return rules[6];
    if (lambda == Partition{4, 4} && mu == Partition{5, 3}) return rules[7];
    if (lambda == Partition{2, 2, 2, 2, 2} && mu == Partition{5, 3, 2}) return rules[8];
    return std::nullopt;
}

bool has_invariant_sn(const Partition& lambda, const Partition& mu) {
    return !sn_invariant_exception(lambda, mu).has_value();
}

std::optional<ExceptionRule> an_invariant_exception(const AnIrrep& v, const AnClass& c) {
    require_same_size(v.n(), c.n());
    const int n = v.n();
    const auto& rules = an_invariant_table();
    const Partition& lambda = v.lambda();
    const Partition& mu = c.mu();
    if (lambda == Partition{2, 1} && mu == Partition{3}) return rules[0];
    if (lambda == Partition{2, 2} && mu == Partition{3, 1}) return rules[1];
    if (lambda == Partition{4, 4} && mu == Partition{5, 3}) return rules[2];
    if (n > 3 && n % 2 == 1 && lambda == hook(n, 1) && mu == Partition{n}) return rules[3];
    return std::nullopt;
}

bool has_invariant_an(const AnIrrep& v, const AnClass& c) {
    return !an_invariant_exception(v, c).has_value();
}

std::optional<ExceptionRule> sn_unisingular_exception(const Partition& lambda) {
    const int n = lambda.n();
    const auto& rules = sn_unisingular_table();
    if (n >= 2 && lambda == hook(n, n - 1)) return rules[0];
    if (n >= 2 && lambda == hook(n, 1)) return rules[1];
    if (n >= 3 && n % 2 == 1 && lambda == twos_and_ones(1, n - 2)) return rules[2];
    if (n >= 5 && n % 2 == 1 && lambda == twos_and_ones(2, n - 4)) return rules[3];
    static const std::vector<Partition> sporadic{
        Partition{2, 2}, Partition{2, 2, 2}, Partition{2, 2, 2, 2}, Partition{4, 4},
        Partition{2, 2, 2, 2, 2}};
    if (std::find(sporadic.begin(), sporadic.end(), lambda) != sporadic.end()) return rules[4];
    return std::nullopt;
}

std::optional<ExceptionRule> an_unisingular_exception(const AnIrrep& v) {
    const int n = v.n();
    const auto& rules = an_unisingular_table();
    const Partition& lambda = v.lambda();
    if (lambda == Partition{2, 1}) return rules[0];
    if (lambda == Partition{2, 2}) return rules[1];
    if (lambda == Partition{4, 4}) return rules[2];
    if (n > 3 && n % 2 == 1 && lambda == hook(n, 1)) return rules[3];
    return std::nullopt;
}

bool unisingular_sn(const Partition& lambda) { return !sn_unisingular_exception(lambda).has_value(); }
bool unisingular_an(const AnIrrep& v) { return !an_unisingular_exception(v).has_value(); }

std::vector<SwansonException> swanson_exceptions(int n) {
    if (n < 2) throw std::invalid_argument("swanson_exceptions needs n >= 2");
    const auto& rules = swanson_table();
    std::vector<SwansonException> out;
    std::set<std::pair<Partition, std::int64_t>> seen;
    auto add = [&](const Partition& lambda, std::int64_t i, const ExceptionRule& rule) {
        if (seen.insert({lambda, i}).second) out.push_back({lambda, i, rule.id});
    };
    if (n == 4) {
        for (std::int64_t i : {1, 3}) add(Partition{2, 2}, i, rules[0]);
    }
    if (n == 6) {
        for (std::int64_t i : {1, 5}) add(Partition{2, 2, 2}, i, rules[1]);
        for (std::int64_t i : {2, 4}) add(Partition{3, 3}, i, rules[2]);
    }
    add(twos_and_ones(1, n - 2), n % 2 == 1 ? 0 : n / 2, rules[3]);
    for (std::int64_t i = 1; i < n; ++i) add(Partition{n}, i, rules[4]);
    const std::int64_t sign_eigenvalue = n % 2 == 1 ? 0 : n / 2;
    for (std::int64_t i = 0; i < n; ++i) {
        if (i != sign_eigenvalue) add(hook(n, n - 1), i, rules[5]);
    }
    add(hook(n, 1), 0, rules[6]);
    std::sort(out.begin(), out.end(), [](const SwansonException& a, const SwansonException& b) {
        if (a.lambda != b.lambda) return a.lambda > b.lambda;
        return a.i < b.i;
    });
    return out;
}

bool full_minimal_polynomial_sn(const Partition& lambda, const Partition& mu) {
    return sn_multiplicity_vector(lambda, mu).all_positive();
}

bool full_minimal_polynomial_an(const AnIrrep& v, const AnClass& c) {
    return an_multiplicity_vector(v, c).all_positive();
}

}  // namespace altchar
