#include "altchar/permutation.hpp"

#include <stdexcept>

namespace altchar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() ||
            seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("images do not form a bijection");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = x;
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
    std::vector<int> images = identity(n).images();
    std::swap(images.at(static_cast<std::size_t>(a)), images.at(static_cast<std::size_t>(b)));
    return Permutation(std::move(images));
}

Permutation Permutation::standard_rep(const Partition& mu) {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(mu.n()));
    int start = 0;
    for (int part : mu.parts()) {
        for (int k = 0; k < part; ++k) images.push_back(start + (k + 1) % part);
        start += part;
    }
    return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(images_[i]);
    }
    return out + "]";
}

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw std::invalid_argument("permutation degree mismatch: " + std::to_string(a.degree()) +
                                    " vs " + std::to_string(b.degree()));
    }
}

/// Cycles as lists of points, each starting at its smallest point, ordered
/// by starting point.
std::vector<std::vector<int>> cycles(const Permutation& sigma) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(sigma.degree()), false);
    for (int start = 0; start < sigma.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

}  // namespace

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    require_same_degree(sigma, tau);
    std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
    for (int x = 0; x < sigma.degree(); ++x) images[static_cast<std::size_t>(x)] = sigma(tau(x));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& sigma) {
    std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
    for (int x = 0; x < sigma.degree(); ++x) images[static_cast<std::size_t>(sigma(x))] = x;
    return Permutation(std::move(images));
}

Permutation power(const Permutation& sigma, std::int64_t k) {
    std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
    for (const auto& cycle : cycles(sigma)) {
        const auto len = static_cast<std::int64_t>(cycle.size());
        const std::int64_t shift = ((k % len) + len) % len;
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            images[static_cast<std::size_t>(cycle[t])] =
                cycle[static_cast<std::size_t>((static_cast<std::int64_t>(t) + shift) % len)];
        }
    }
    return Permutation(std::move(images));
}

Permutation conjugate_by(const Permutation& sigma, const Permutation& rho) {
    return compose(compose(rho, sigma), inverse(rho));
}

int sign(const Permutation& sigma) {
    int even_cycles = 0;
    for (const auto& cycle : cycles(sigma)) {
        if (cycle.size() % 2 == 0) ++even_cycles;
    }
    return even_cycles % 2 == 0 ? 1 : -1;
}

Partition cycle_type(const Permutation& sigma) {
    std::vector<int> lengths;
    for (const auto& cycle : cycles(sigma)) lengths.push_back(static_cast<int>(cycle.size()));
    return Partition::from_unsorted(std::move(lengths));
}

std::optional<Permutation> conjugator(const Permutation& sigma, const Permutation& tau) {
    require_same_degree(sigma, tau);
    auto from = cycles(sigma);
    auto to = cycles(tau);
    if (from.size() != to.size()) return std::nullopt;
    // Pair cycles of equal length in order of appearance; ρ sends σ^k(x) to τ^k(y).
    std::vector<bool> used(to.size(), false);
    std::vector<int> images(static_cast<std::size_t>(sigma.degree()), -1);
    for (const auto& c : from) {
        std::size_t match = to.size();
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (!used[j] && to[j].size() == c.size()) {
                match = j;
                break;
            }
        }
        if (match == to.size()) return std::nullopt;
        used[match] = true;
        for (std::size_t t = 0; t < c.size(); ++t) {
            images[static_cast<std::size_t>(c[t])] = to[match][t];
        }
    }
    return Permutation(std::move(images));
}

}  // namespace altchar
