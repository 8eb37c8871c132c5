#include "altchar/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "altchar/characters.hpp"
#include "altchar/classification.hpp"
#include "altchar/cycle_type.hpp"
#include "altchar/global_classes.hpp"
#include "altchar/multiplicities.hpp"
#include "altchar/number_theory.hpp"
#include "altchar/permutation.hpp"

namespace altchar {

namespace {

using Complex = std::complex<double>;

constexpr double kNumericTolerance = 1e-8;

// Records the first discrepancy and counts checks.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& describe) {
        ++checks_;
        if (!ok && first_failure_.empty()) first_failure_ = describe();
    }
    bool ok() const { return first_failure_.empty(); }
    std::string summary() const {
        return ok() ? std::to_string(checks_) + " checks" : first_failure_;
    }

private:
    long checks_ = 0;
    std::string first_failure_;
};

Complex root_of_unity(std::int64_t k, std::int64_t m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod_floor(k, m)) /
                               static_cast<double>(m));
}

std::string vec_label(const Partition& lambda, const Partition& mu, std::int64_t i) {
    return "lambda=(" + lambda.to_string() + ") mu=(" + mu.to_string() + ") i=" + std::to_string(i);
}

void worked_example(Tally& t) {
    const Partition mu{15, 9, 3};
    for (std::int64_t i : {0, 1, 15}) {
        const auto d = bias(mu, i).value;
        t.check(d == 0, [&] { return "d at i=" + std::to_string(i) + " is " + std::to_string(d); });
    }
    const auto d3 = bias(mu, 3).value;
    const auto d9 = bias(mu, 9).value;
    t.check(std::abs(d3) == 3, [&] { return "|d| at i=3 is " + std::to_string(std::abs(d3)); });
    t.check(std::abs(d9) == 6, [&] { return "|d| at i=9 is " + std::to_string(std::abs(d9)); });
}

void bias_equivalence(Tally& t) {
    for (int n = 1; n <= 25; ++n) {
        for (const Partition& mu : distinct_odd_partitions_of(n)) {
            const CycleTypeData data = cycle_type_data(mu);
            for (std::int64_t i = 0; i < data.order; ++i) {
                const auto closed = bias(mu, i).value;
                const auto oracle = bias_oracle(mu, i);
                t.check(closed == oracle, [&] {
                    return "mu=(" + mu.to_string() + ") i=" + std::to_string(i) + ": closed " +
                           std::to_string(closed) + " vs oracle " + std::to_string(oracle);
                });
                if (n > 1) {
                    t.check(closed * closed < data.product, [&] {
                        return "|d| >= sqrt(M) at mu=(" + mu.to_string() + ") i=" + std::to_string(i);
                    });
                }
            }
            const bool d0 = bias(mu, 0).value != 0;
            t.check(d0 == is_square(data.product),
                    [&] { return "i=0 square criterion fails at (" + mu.to_string() + ")"; });
            const bool d1 = bias(mu, 1).value != 0;
            t.check(d1 == is_square_free(data.order),
                    [&] { return "i=1 square-free criterion fails at (" + mu.to_string() + ")"; });
        }
    }
}

void sn_engine(Tally& t) {
    for (int n = 1; n <= 9; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const BigInt dim = dimension(lambda);
            for (const Partition& mu : partitions_of(n)) {
                const MultiplicityVector v = sn_multiplicity_vector(lambda, mu);
                for (std::int64_t i = 0; i < v.m; ++i) {
                    const BigInt oracle = sn_multiplicity_oracle(lambda, mu, i);
                    t.check(v.entries[static_cast<std::size_t>(i)] == oracle, [&] {
                        return vec_label(lambda, mu, i) + ": engine " +
                               v.entries[static_cast<std::size_t>(i)].str() + " vs oracle " +
                               oracle.str();
                    });
                }
                t.check(v.total() == dim, [&] {
                    return "sum of multiplicities != dimension for (" + lambda.to_string() +
                           "), (" + mu.to_string() + ")";
                });
                // Σ_i a_i ζ^{ij} must give χ_λ(w_μ^j) for every power j.
                for (std::int64_t j = 0; j < v.m; ++j) {
                    Complex sum = 0.0;
                    for (std::int64_t i = 0; i < v.m; ++i) {
                        sum += v.entries[static_cast<std::size_t>(i)].convert_to<double>() *
                               root_of_unity(i * j, v.m);
                    }
                    const double chi =
                        mn_character(lambda, power_cycle_type(mu, j)).convert_to<double>();
                    t.check(std::abs(sum - Complex(chi, 0.0)) < kNumericTolerance, [&] {
                        return "reconstruction off at " + vec_label(lambda, mu, j);
                    });
                }
            }
        }
    }
}

void swanson(Tally& t) {
    for (int n = 2; n <= 12; ++n) {
        std::set<std::pair<Partition, std::int64_t>> computed;
        std::set<std::pair<Partition, std::int64_t>> listed;
        const Partition cycle{n};
        for (const Partition& lambda : partitions_of(n)) {
            const MultiplicityVector v = sn_multiplicity_vector(lambda, cycle);
            for (std::int64_t i = 0; i < v.m; ++i) {
                if (v.entries[static_cast<std::size_t>(i)] == 0) computed.insert({lambda, i});
            }
        }
        for (const auto& e : swanson_exceptions(n)) listed.insert({e.lambda, e.i});
        t.check(computed == listed, [&] {
            for (const auto& [lambda, i] : computed) {
                if (!listed.count({lambda, i})) {
                    return "n=" + std::to_string(n) + ": unlisted zero at (" + lambda.to_string() +
                           "), i=" + std::to_string(i);
                }
            }
            for (const auto& [lambda, i] : listed) {
                if (!computed.count({lambda, i})) {
                    return "n=" + std::to_string(n) + ": listed (" + lambda.to_string() +
                           "), i=" + std::to_string(i) + " has positive multiplicity";
                }
            }
            return "n=" + std::to_string(n) + ": mismatch";
        });
    }
}

void invariant_vectors(Tally& t) {
    for (int n = 3; n <= 12; ++n) {
        for (const auto& v : an_irreps(n)) {
            for (const auto& c : an_classes(n)) {
                const bool zero = an_multiplicity(v.irrep, c.cls, 0) == 0;
                const bool listed = !has_invariant_an(v.irrep, c.cls);
                t.check(zero == listed, [&] {
                    return v.irrep.label() + " at " + c.cls.label() +
                           (zero ? ": no fixed vector, not listed" : ": listed, but fixed vector exists");
                });
            }
        }
    }
}

void power_classes(Tally& t) {
    for (int n = 1; n <= 10; ++n) {
        for (const Partition& mu : distinct_odd_partitions_of(n)) {
            const std::int64_t m = cycle_type_data(mu).order;
            const Permutation w = Permutation::standard_rep(mu);
            // m = 1 still has the power i = 1.
            for (std::int64_t i = 1; i < std::max<std::int64_t>(m, 2); ++i) {
                if (gcd64(i, m) != 1) continue;
                const bool jacobi_same = power_conjugacy(mu, i) == PowerClass::Same;
                const bool parity_same = split_class_of(power(w, i)) == ClassTag::Plus;
                t.check(jacobi_same == parity_same, [&] {
                    return "mu=(" + mu.to_string() + ") i=" + std::to_string(i) +
                           ": Jacobi and conjugator parity disagree";
                });
            }
        }
    }
}

void global_classes(Tally& t) {
    for (int n = 2; n <= 11; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            if (!within_global_hypothesis(mu)) continue;
            const auto closed = is_global_class(mu);
            const auto brute = global_brute_force(mu);
            t.check(closed.is_global == brute.is_global, [&] {
                return "(" + mu.to_string() + "): closed form and brute force disagree";
            });
        }
    }
    for (const Partition& mu : {Partition{3, 1}, Partition{3, 3}, Partition{3, 3, 1, 1}}) {
        t.check(!*global_brute_force(mu).is_global,
                [&] { return "(" + mu.to_string() + ") should not be global"; });
    }
    const auto v53 = global_brute_force(Partition{5, 3});
    t.check(!*v53.is_global && v53.witness && v53.witness->multiplicity == 0,
            [] { return "(5,3) should fail with a zero-multiplicity witness"; });
    for (const Partition& mu :
         {Partition{7, 1}, Partition{5, 5}, Partition{5, 3, 1}, Partition{7, 3, 1}}) {
        t.check(*global_brute_force(mu).is_global,
                [&] { return "(" + mu.to_string() + ") should be global"; });
    }
}

void character_tables(Tally& t) {
    for (int n = 2; n <= 12; ++n) {
        const CharacterTable table = character_table_an(n);
        const double order = factorial(n).convert_to<double>() / 2.0;
        const std::size_t k = table.classes.size();
        t.check(table.irreps.size() == k, [&] { return "n=" + std::to_string(n) + ": table not square"; });

        std::vector<std::vector<Complex>> chi(k, std::vector<Complex>(k));
        std::vector<double> sizes(k);
        for (std::size_t c = 0; c < k; ++c) sizes[c] = table.classes[c].size.convert_to<double>();
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) chi[r][c] = table.values[r][c].to_complex();
        }
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t s = r; s < k; ++s) {
                Complex sum = 0.0;
                for (std::size_t c = 0; c < k; ++c) sum += sizes[c] * chi[r][c] * std::conj(chi[s][c]);
                const double expected = r == s ? 1.0 : 0.0;
                t.check(std::abs(sum / order - expected) < kNumericTolerance, [&] {
                    return "n=" + std::to_string(n) + ": rows " + table.irreps[r].irrep.label() +
                           ", " + table.irreps[s].irrep.label() + " not orthonormal";
                });
            }
        }
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t d = c; d < k; ++d) {
                Complex sum = 0.0;
                for (std::size_t r = 0; r < k; ++r) sum += chi[r][c] * std::conj(chi[r][d]);
                const double expected = c == d ? order / sizes[c] : 0.0;
                t.check(std::abs(sum - expected) < kNumericTolerance * std::max(1.0, expected), [&] {
                    return "n=" + std::to_string(n) + ": columns " + table.classes[c].cls.label() +
                           ", " + table.classes[d].cls.label() + " not orthogonal";
                });
            }
        }
        BigInt dims = 0;
        for (const auto& v : table.irreps) dims += v.dimension * v.dimension;
        t.check(2 * dims == factorial(n),
                [&] { return "n=" + std::to_string(n) + ": sum of squared dimensions != n!/2"; });
    }
}

void halving(Tally& t) {
    for (int n = 2; n <= 12; ++n) {
        for (const auto& v : an_irreps(n)) {
            if (!v.irrep.is_split()) continue;
            const Partition& lambda = v.irrep.lambda();
            for (const auto& c : an_classes(n)) {
                const Partition& mu = c.cls.mu();
                if (mu.has_distinct_odd_parts() && lambda == phi(mu)) continue;
                const MultiplicityVector whole = sn_multiplicity_vector(lambda, mu);
                const auto oracle = an_multiplicity_oracle_vector(v.irrep, c.cls);
                for (std::int64_t i = 0; i < whole.m; ++i) {
                    const BigInt& a = whole.entries[static_cast<std::size_t>(i)];
                    const BigInt twice = 2 * BigInt(oracle[static_cast<std::size_t>(i)]);
                    t.check(twice == a, [&] {
                        return v.irrep.label() + " at " + c.cls.label() + " i=" + std::to_string(i) +
                               ": " + std::to_string(oracle[static_cast<std::size_t>(i)]) +
                               " is not half of " + a.str();
                    });
                    t.check(an_multiplicity(v.irrep, c.cls, i) * 2 == a, [&] {
                        return v.irrep.label() + " at " + c.cls.label() + " i=" + std::to_string(i) +
                               ": dispatcher does not halve";
                    });
                }
            }
        }
    }
}

struct Criterion {
    const char* name;
    double limit_seconds;
    void (*run)(Tally&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"worked bias example (15,9,3)", 1.0, worked_example},
    {"bias closed form equals numeric oracle, |mu| <= 25", 120.0, bias_equivalence},
    {"S_n multiplicity engine against cyclotomic oracle, n <= 9", 300.0, sn_engine},
    {"n-cycle zero multiplicities equal the exception list, n <= 12", 120.0, swanson},
    {"A_n invariant vectors equal the exception list, 3 <= n <= 12", 600.0, invariant_vectors},
    {"power conjugacy: Jacobi symbol equals conjugator parity, |mu| <= 10", 60.0, power_classes},
    {"global classes: closed form equals brute force, n <= 11", 600.0, global_classes},
    {"A_n character tables: orthogonality and dimensions, n <= 12", 120.0, character_tables},
    {"split irreps away from phi(mu) take half multiplicities, n <= 12", 300.0, halving},
};

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > kCriterionCount) {
        throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
    }
    const Criterion& criterion = kCriteria[id - 1];
    CriterionResult result;
    result.id = id;
    result.name = criterion.name;
    result.limit_seconds = criterion.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
        Tally tally;
        criterion.run(tally);
        result.correct = tally.ok();
        result.detail = tally.summary();
    } catch (const std::exception& e) {
        result.correct = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, std::ostream* out) {
    std::vector<CriterionResult> results;
    for (int id : ids) {
        results.push_back(run_criterion(id));
        if (out != nullptr) *out << format_result(results.back()) << std::endl;
    }
    return results;
}

std::string format_result(const CriterionResult& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / limit %.0f s", r.seconds, r.limit_seconds);
    std::ostringstream line;
    line << (r.passed() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << timing
         << "): ";
    if (r.correct && !r.passed()) line << "runtime limit exceeded; ";
    line << r.detail;
    return line.str();
}

}  // namespace altchar
