#include "altchar/multiplicities.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "altchar/cycle_type.hpp"
#include "altchar/errors.hpp"
#include "altchar/global_classes.hpp"
#include "altchar/number_theory.hpp"
#include "altchar/permutation.hpp"

namespace altchar {

namespace {

constexpr double kOracleTolerance = 1e-6;

std::vector<std::int64_t> divisors(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d == 0) out.push_back(d);
    }
    return out;
}

std::int64_t element_order(const Partition& mu) { return cycle_type_data(mu).order; }

/// Σ_{d | m} χ_λ(w^d) c_{m/d}(i) for each i in [0, m).
std::vector<BigInt> grouped_character_sums(const Partition& lambda, const Partition& mu,
                                           std::int64_t m) {
    std::vector<std::pair<std::int64_t, BigInt>> chi_at_divisor;
    for (std::int64_t d : divisors(m)) {
        chi_at_divisor.emplace_back(d, mn_character(lambda, power_cycle_type(mu, d)));
    }
    std::vector<BigInt> sums(static_cast<std::size_t>(m), 0);
    for (std::int64_t i = 0; i < m; ++i) {
        for (const auto& [d, chi] : chi_at_divisor) {
            sums[static_cast<std::size_t>(i)] += chi * ramanujan(m / d, i);
        }
    }
    return sums;
}

void require_same_size(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) {
        throw std::invalid_argument("size mismatch: |" + lambda.to_string() + "| != |" +
                                    mu.to_string() + "|");
    }
}

BigInt checked_nonnegative(BigInt x, const char* context) {
    if (x < 0) throw InternalError(std::string(context) + ": negative multiplicity " + x.str());
    return x;
}

// Polynomials as coefficient vectors, constant term first.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder of p modulo the monic polynomial `divisor`; quotient optional.
Poly poly_divmod(Poly p, const Poly& divisor, Poly* quotient) {
    const std::size_t dd = divisor.size() - 1;
    trim(p);
    if (quotient != nullptr) quotient->assign(p.size() > dd ? p.size() - dd : 1, 0);
    while (p.size() > dd) {
        const std::size_t shift = p.size() - 1 - dd;
        const BigInt lead = p.back();
        if (quotient != nullptr) (*quotient)[shift] = lead;
        for (std::size_t t = 0; t <= dd; ++t) p[shift + t] -= lead * divisor[t];
        trim(p);
    }
    return p;
}

std::mutex cyclotomic_mutex;
std::map<std::int64_t, Poly> cyclotomic_cache;

}  // namespace

BigInt MultiplicityVector::total() const {
    BigInt sum = 0;
    for (const auto& x : entries) sum += x;
    return sum;
}

bool MultiplicityVector::all_positive() const {
    for (const auto& x : entries) {
        if (x <= 0) return false;
    }
    return true;
}

MultiplicityVector sn_multiplicity_vector(const Partition& lambda, const Partition& mu) {
    require_same_size(lambda, mu);
    MultiplicityVector out;
    out.m = element_order(mu);
    for (const BigInt& sum : grouped_character_sums(lambda, mu, out.m)) {
        out.entries.push_back(
            checked_nonnegative(exact_div(sum, out.m, "eigenvalue multiplicity"), "sn_multiplicity"));
    }
    return out;
}

BigInt sn_multiplicity(const Partition& lambda, const Partition& mu, std::int64_t i) {
    require_same_size(lambda, mu);
    const std::int64_t m = element_order(mu);
    BigInt sum = 0;
    for (std::int64_t d : divisors(m)) {
        sum += mn_character(lambda, power_cycle_type(mu, d)) * ramanujan(m / d, i);
    }
    return checked_nonnegative(exact_div(sum, m, "eigenvalue multiplicity"), "sn_multiplicity");
}

std::vector<BigInt> cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("cyclotomic polynomial needs m >= 1");
    {
        std::lock_guard lock(cyclotomic_mutex);
        if (auto it = cyclotomic_cache.find(m); it != cyclotomic_cache.end()) return it->second;
    }
    // Φ_m = (x^m - 1) / ∏_{d | m, d < m} Φ_d.
    Poly result(static_cast<std::size_t>(m) + 1, 0);
    result.front() = -1;
    result.back() = 1;
    for (std::int64_t d : divisors(m)) {
        if (d == m) continue;
        Poly quotient;
        const Poly rem = poly_divmod(result, cyclotomic_polynomial(d), &quotient);
        ensure(rem.empty(), "cyclotomic division left a remainder");
        result = std::move(quotient);
    }
    std::lock_guard lock(cyclotomic_mutex);
    cyclotomic_cache.emplace(m, result);
    return result;
}

BigInt sn_multiplicity_oracle(const Partition& lambda, const Partition& mu, std::int64_t i) {
    require_same_size(lambda, mu);
    const Permutation w = Permutation::standard_rep(mu);
    std::int64_t m = 1;
    const Partition type = cycle_type(w);
    for (int part : type.parts()) m = std::lcm(m, static_cast<std::int64_t>(part));

    Poly poly(static_cast<std::size_t>(m), 0);
    for (std::int64_t j = 0; j < m; ++j) {
        const BigInt chi = mn_character(lambda, cycle_type(power(w, j)));
        poly[static_cast<std::size_t>(mod_floor(-i * j, m))] += chi;
    }
    const Poly rem = poly_divmod(poly, cyclotomic_polynomial(m), nullptr);
    if (rem.size() > 1) {
        throw InternalError("cyclotomic reduction left a non-constant remainder for (" +
                            lambda.to_string() + "), (" + mu.to_string() + ")");
    }
    const BigInt constant = rem.empty() ? BigInt(0) : rem.front();
    return checked_nonnegative(exact_div(constant, m, "cyclotomic oracle"), "oracle");
}

BiasResult bias(const Partition& mu, std::int64_t i, BiasOrientation orientation) {
    if (!mu.has_distinct_odd_parts()) {
        throw std::invalid_argument("bias needs distinct odd parts, got (" + mu.to_string() + ")");
    }
    const CycleTypeData data = cycle_type_data(mu);
    const std::int64_t m = data.order;
    const std::int64_t i_eff = orientation == BiasOrientation::Defining ? -i : i;

    BiasResult result;
    result.nonzero = true;
    std::int64_t odd_prime_product = 1;
    std::int64_t even_prime_product = 1;
    std::int64_t unit_factors = 1;  // ∏_{j>s, d_j=f_j} (p_j - 1)

    // √(εM)/m, principal branch.
    std::vector<GaussPhase> factors{
        GaussPhase(Rational(1, m), *data.epsilon < 0 ? 1 : 0, data.product)};

    for (std::size_t j = 0; j < data.primes.size(); ++j) {
        const auto& pe = data.primes[j];
        BiasPrimeCondition cond;
        cond.p = pe.p;
        cond.e = pe.e;
        cond.f = pe.f;
        cond.odd_exponent = static_cast<int>(j) < data.odd_exponent_count;

        std::int64_t pf = 1;
        for (int t = 0; t < pe.f; ++t) pf *= pe.p;
        std::int64_t r = mod_floor(i, pf);
        cond.d = pe.f;
        cond.u = 1;
        if (r != 0) {
            cond.d = 0;
            while (r % pe.p == 0) {
                r /= pe.p;
                ++cond.d;
            }
            cond.u = r;
        }
        cond.satisfied = cond.odd_exponent ? cond.d == pe.f - 1
                                           : (cond.d == pe.f - 1 || cond.d == pe.f);
        result.nonzero = result.nonzero && cond.satisfied;

        if (cond.odd_exponent) {
            odd_prime_product *= pe.p;
            const std::int64_t cofactor = m / pf;  // h_j
            factors.push_back(GaussPhase::integer(jacobi(cofactor, pe.p)) *
                              twisted_sum(pe.p, pe.f, i_eff));
        } else {
            even_prime_product *= pe.p;
            if (cond.d == pe.f) unit_factors *= pe.p - 1;
            factors.push_back(GaussPhase::integer(unit_sum(pe.p, pe.f, i_eff)));
        }
        result.conditions.push_back(cond);
    }

    result.value = phase_to_integer(phase_product(factors));
    if (result.nonzero) {
        const std::int64_t square = data.product / odd_prime_product;
        auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(square))));
        ensure(root * root == square, "M / ∏ odd-exponent primes is not a square");
        const std::int64_t numerator = root * unit_factors;
        ensure(numerator % even_prime_product == 0, "bias magnitude is not integral");
        result.abs_formula = numerator / even_prime_product;
    }
    ensure((result.value != 0) == result.nonzero,
           "bias vanishing disagrees with the non-vanishing criterion for (" + mu.to_string() +
               "), i = " + std::to_string(i));
    ensure(std::abs(result.value) == result.abs_formula,
           "bias magnitude disagrees with the closed form for (" + mu.to_string() + "), i = " +
               std::to_string(i));
    return result;
}

std::int64_t bias_oracle(const Partition& mu, std::int64_t i) {
    if (!mu.has_distinct_odd_parts()) {
        throw std::invalid_argument("bias needs distinct odd parts, got (" + mu.to_string() + ")");
    }
    std::int64_t product = 1;
    std::int64_t m = 1;
    int half_sum = 0;
    for (int part : mu.parts()) {
        product *= part;
        m = std::lcm(m, static_cast<std::int64_t>(part));
        half_sum += (part - 1) / 2;
    }
    const double root = std::sqrt(static_cast<double>(product));
    const std::complex<double> prefactor =
        half_sum % 2 == 0 ? std::complex<double>(root, 0.0) : std::complex<double>(0.0, root);

    std::complex<double> sum = 0.0;
    for (std::int64_t l = 0; l < m; ++l) {
        const int symbol = jacobi(l, product);
        if (symbol == 0) continue;
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(mod_floor(i * l, m)) /
                             static_cast<double>(m);
        sum += static_cast<double>(symbol) * std::polar(1.0, angle);
    }
    const std::complex<double> value = prefactor * sum / static_cast<double>(m);
    const double nearest = std::round(value.real());
    if (std::abs(value.imag()) >= kOracleTolerance || std::abs(value.real() - nearest) >= kOracleTolerance) {
        throw InternalError("bias oracle for (" + mu.to_string() + "), i = " + std::to_string(i) +
                            " is not near an integer");
    }
    return static_cast<std::int64_t>(nearest);
}

AnMultiplicityCase an_multiplicity_case(const AnIrrep& v, const AnClass& c) {
    if (!v.is_split()) return AnMultiplicityCase::Unsplit;
    if (c.is_split() && v.lambda() == phi(c.mu())) return AnMultiplicityCase::SplitBiased;
    return AnMultiplicityCase::SplitHalved;
}

namespace {

void require_matching(const AnIrrep& v, const AnClass& c) {
    if (v.n() != c.n()) {
        throw std::invalid_argument("irrep " + v.label() + " and class " + c.label() +
                                    " have different degrees");
    }
    if (v.n() < 2) throw std::invalid_argument("alternating group needs n >= 2");
}

BigInt an_entry(const AnIrrep& v, const AnClass& c, AnMultiplicityCase which, const BigInt& a,
                std::int64_t i) {
    switch (which) {
        case AnMultiplicityCase::Unsplit:
            return a;
        case AnMultiplicityCase::SplitBiased: {
            const std::int64_t d = bias(c.mu(), i).value;
            const bool same = (v.tag() == IrrepTag::Plus) == (c.tag() == ClassTag::Plus);
            return checked_nonnegative(exact_div(a + (same ? d : -d), 2, "biased halving"),
                                       "an_multiplicity");
        }
        case AnMultiplicityCase::SplitHalved:
            return exact_div(a, 2, "halving");
    }
    throw InternalError("unreachable multiplicity case");
}

}  // namespace

BigInt an_multiplicity(const AnIrrep& v, const AnClass& c, std::int64_t i) {
    require_matching(v, c);
    const auto which = an_multiplicity_case(v, c);
    return an_entry(v, c, which, sn_multiplicity(v.lambda(), c.mu(), i), i);
}

MultiplicityVector an_multiplicity_vector(const AnIrrep& v, const AnClass& c) {
    require_matching(v, c);
    const auto which = an_multiplicity_case(v, c);
    MultiplicityVector out = sn_multiplicity_vector(v.lambda(), c.mu());
    for (std::int64_t i = 0; i < out.m; ++i) {
        auto& entry = out.entries[static_cast<std::size_t>(i)];
        entry = an_entry(v, c, which, entry, i);
    }
    return out;
}

std::vector<std::int64_t> an_multiplicity_oracle_vector(const AnIrrep& v, const AnClass& c) {
    require_matching(v, c);
    const Permutation w = representative(c);
    std::int64_t m = 1;
    const Partition type = cycle_type(w);
    for (int part : type.parts()) m = std::lcm(m, static_cast<std::int64_t>(part));

    std::vector<std::complex<double>> chi;
    Permutation x = Permutation::identity(w.degree());
    for (std::int64_t j = 0; j < m; ++j) {
        chi.push_back(an_character(v, an_class_of(x)).to_complex());
        x = compose(w, x);
    }
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < m; ++i) {
        std::complex<double> sum = 0.0;
        for (std::int64_t j = 0; j < m; ++j) {
            const double angle = -2.0 * std::numbers::pi *
                                 static_cast<double>(mod_floor(i * j, m)) / static_cast<double>(m);
            sum += chi[static_cast<std::size_t>(j)] * std::polar(1.0, angle);
        }
        const std::complex<double> value = sum / static_cast<double>(m);
        const double nearest = std::round(value.real());
        if (std::abs(value.imag()) >= kOracleTolerance ||
            std::abs(value.real() - nearest) >= kOracleTolerance || nearest < 0) {
            throw InternalError("A_n multiplicity oracle for " + v.label() + " at " + c.label() +
                                " is not a non-negative integer");
        }
        out.push_back(static_cast<std::int64_t>(nearest));
    }
    return out;
}

std::int64_t an_multiplicity_oracle(const AnIrrep& v, const AnClass& c, std::int64_t i) {
    const auto all = an_multiplicity_oracle_vector(v, c);
    return all[static_cast<std::size_t>(mod_floor(i, static_cast<std::int64_t>(all.size())))];
}

PowerClass power_conjugacy(const Partition& mu, std::int64_t i) {
    if (!mu.has_distinct_odd_parts()) {
        throw std::invalid_argument("power_conjugacy needs distinct odd parts, got (" +
                                    mu.to_string() + ")");
    }
    const CycleTypeData data = cycle_type_data(mu);
    if (gcd64(mod_floor(i, data.order), data.order) != 1) {
        throw std::invalid_argument("power " + std::to_string(i) + " is not coprime to the order " +
                                    std::to_string(data.order));
    }
    return jacobi(i, data.product) == 1 ? PowerClass::Same : PowerClass::Swapped;
}

}  // namespace altchar
