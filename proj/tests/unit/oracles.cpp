#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace oracle {

using altchar::BigInt;
using altchar::Partition;
using altchar::Permutation;

Complex root_of_unity(std::int64_t k, std::int64_t m) {
    std::int64_t r = k % m;
    if (r < 0) r += m;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m));
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

int sign_by_inversions(const std::vector<int>& images) {
    int inversions = 0;
    for (std::size_t a = 0; a < images.size(); ++a) {
        for (std::size_t b = a + 1; b < images.size(); ++b) {
            if (images[a] > images[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

BigInt dimension_by_corners(const Partition& lambda) {
    static std::map<std::vector<int>, BigInt> memo;
    if (lambda.n() <= 1) return 1;
    auto it = memo.find(lambda.parts());
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    const auto& parts = lambda.parts();
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (r + 1 < parts.size() && parts[r + 1] == parts[r]) continue;
        std::vector<int> smaller = parts;
        if (--smaller[r] == 0) smaller.pop_back();
        total += dimension_by_corners(Partition(smaller));
    }
    memo.emplace(parts, total);
    return total;
}

Partition conjugate_by_cells(const Partition& lambda) {
    std::vector<int> columns;
    for (int row = 0; row < static_cast<int>(lambda.length()); ++row) {
        for (int col = 0; col < lambda[static_cast<std::size_t>(row)]; ++col) {
            if (static_cast<std::size_t>(col) >= columns.size()) columns.push_back(0);
            ++columns[static_cast<std::size_t>(col)];
        }
    }
    return Partition(columns);
}

long centralizer_count(const Partition& mu) {
    const Permutation w = Permutation::standard_rep(mu);
    long count = 0;
    for (const auto& s : symmetric_group(mu.n())) {
        bool commutes = true;
        for (int x = 0; x < mu.n() && commutes; ++x) commutes = s(w(x)) == w(s(x));
        count += commutes;
    }
    return count;
}

int legendre_by_squares(std::int64_t a, std::int64_t p) {
    const std::int64_t r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == r) return 1;
    }
    return -1;
}

int jacobi_by_factors(std::int64_t a, std::int64_t n) {
    int out = 1;
    std::int64_t rest = n;
    for (std::int64_t p = 3; rest > 1; p += 2) {
        while (rest % p == 0) {
            out *= legendre_by_squares(a, p);
            rest /= p;
        }
    }
    return out;
}

Complex unit_sum(std::int64_t q, std::int64_t i) {
    Complex sum = 0.0;
    for (std::int64_t l = 0; l < q; ++l) {
        if (std::gcd(l, q) == 1) sum += root_of_unity(i * l, q);
    }
    return sum;
}

Complex twisted_sum(std::int64_t p, int f, std::int64_t i) {
    std::int64_t q = 1;
    for (int k = 0; k < f; ++k) q *= p;
    Complex sum = 0.0;
    for (std::int64_t l = 0; l < q; ++l) {
        if (l % p != 0) sum += static_cast<double>(legendre_by_squares(l, p)) * root_of_unity(i * l, q);
    }
    return sum;
}

namespace {

// Ways to drop the parts parts[from..] into boxes so that box t receives
// exactly target[t].
long distributions(const std::vector<int>& parts, std::size_t from, std::vector<int>& target) {
    if (from == parts.size()) {
        return std::all_of(target.begin(), target.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    long total = 0;
    for (auto& box : target) {
        if (box < parts[from]) continue;
        box -= parts[from];
        total += distributions(parts, from + 1, target);
        box += parts[from];
    }
    return total;
}

}  // namespace

long frobenius_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("size mismatch");
    const int k = static_cast<int>(lambda.length());
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    long total = 0;
    do {
        std::vector<int> target(static_cast<std::size_t>(k));
        bool feasible = true;
        for (int t = 0; t < k; ++t) {
            const int delta_t = k - 1 - t;
            const int delta_sigma = k - 1 - sigma[static_cast<std::size_t>(t)];
            target[static_cast<std::size_t>(t)] = lambda[static_cast<std::size_t>(t)] + delta_t - delta_sigma;
            feasible = feasible && target[static_cast<std::size_t>(t)] >= 0;
        }
        if (feasible) total += sign_by_inversions(sigma) * distributions(mu.parts(), 0, target);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

double numeric_multiplicity(const Partition& lambda, const Partition& mu, std::int64_t i) {
    std::int64_t m = 1;
    for (int part : mu.parts()) m = std::lcm(m, static_cast<std::int64_t>(part));
    const Permutation w = Permutation::standard_rep(mu);
    Permutation x = Permutation::identity(mu.n());
    Complex sum = 0.0;
    for (std::int64_t j = 0; j < m; ++j) {
        const Partition type = altchar::cycle_type(x);
        sum += static_cast<double>(frobenius_character(lambda, type)) * root_of_unity(-i * j, m);
        x = altchar::compose(w, x);
    }
    return sum.real() / static_cast<double>(m);
}

int multiplication_sign(std::int64_t i, std::int64_t M) {
    std::vector<int> images(static_cast<std::size_t>(M));
    for (std::int64_t x = 0; x < M; ++x) images[static_cast<std::size_t>(x)] = static_cast<int>(i * x % M);
    return sign_by_inversions(images);
}

bool even_conjugator_exists(const Permutation& sigma, const Permutation& tau) {
    for (const auto& rho : symmetric_group(sigma.degree())) {
        if (sign_by_inversions(rho.images()) != 1) continue;
        bool ok = true;
        for (int x = 0; x < sigma.degree() && ok; ++x) ok = rho(sigma(x)) == tau(rho(x));
        if (ok) return true;
    }
    return false;
}

}  // namespace oracle
