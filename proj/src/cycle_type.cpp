#include "altchar/cycle_type.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace altchar {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("cycle-type product exceeds 64 bits");
    }
    return out;
}

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd64(a, b), b);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t x) {
    if (x <= 0) throw std::invalid_argument("factorize expects a positive integer");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        int e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

CycleTypeData cycle_type_data(const Partition& mu) {
    CycleTypeData data;
    data.mu = mu;
    for (int part : mu.parts()) {
        data.product = checked_mul(data.product, part);
        data.order = lcm64(data.order, part);
    }
    std::vector<PrimeExponents> odd_exp;
    std::vector<PrimeExponents> even_exp;
    for (auto [p, e] : factorize(data.product)) {
        int f = 0;
        for (std::int64_t t = data.order; t % p == 0; t /= p) ++f;
        (e % 2 == 1 ? odd_exp : even_exp).push_back(PrimeExponents{p, e, f});
    }
    data.odd_exponent_count = static_cast<int>(odd_exp.size());
    data.primes = std::move(odd_exp);
    data.primes.insert(data.primes.end(), even_exp.begin(), even_exp.end());
    if (mu.has_distinct_odd_parts()) {
        int half_sum = 0;
        for (int part : mu.parts()) half_sum += (part - 1) / 2;
        data.epsilon = half_sum % 2 == 0 ? 1 : -1;
    }
    return data;
}

BigInt centralizer_order_sn(const Partition& mu) {
    std::map<int, int> mult;
    for (int part : mu.parts()) ++mult[part];
    BigInt z = 1;
    for (auto [part, count] : mult) {
        z *= boost::multiprecision::pow(BigInt(part), static_cast<unsigned>(count));
        z *= factorial(count);
    }
    return z;
}

BigInt class_size_sn(const Partition& mu) {
    return exact_div(factorial(mu.n()), centralizer_order_sn(mu), "class size");
}

int cycle_type_sign(const Partition& mu) {
    return (mu.n() - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
}

bool in_alternating_group(const Partition& mu) { return mu.count_even_parts() % 2 == 0; }

Partition power_cycle_type(const Partition& mu, std::int64_t d) {
    std::vector<int> parts;
    for (int part : mu.parts()) {
        const auto g = static_cast<int>(gcd64(part, d));
        parts.insert(parts.end(), static_cast<std::size_t>(g), part / g);
    }
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace altchar
