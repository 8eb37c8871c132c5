#include "altchar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "altchar/errors.hpp"

namespace altchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        n_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw ParseError("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid partition '" + std::string(text) + "': " + e.what());
    }
}

int Partition::multiplicity(int part) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::has_distinct_odd_parts() const noexcept {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] % 2 == 0) return false;
        if (i > 0 && parts_[i] == parts_[i - 1]) return false;
    }
    return true;
}

bool Partition::all_parts_odd() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

int Partition::count_even_parts() const noexcept {
    return static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; }));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (lambda.empty()) return Partition{};
    cols.reserve(static_cast<std::size_t>(lambda[0]));
    for (int c = 0; c < lambda[0]; ++c) {
        int height = 0;
        while (static_cast<std::size_t>(height) < lambda.length() &&
               lambda[static_cast<std::size_t>(height)] > c) {
            ++height;
        }
        cols.push_back(height);
    }
    return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

FrobeniusCoords to_frobenius(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    FrobeniusCoords coords;
    for (std::size_t i = 0; i < lambda.length() && lambda[i] > static_cast<int>(i); ++i) {
        coords.arms.push_back(lambda[i] - static_cast<int>(i) - 1);
        coords.legs.push_back(conj[i] - static_cast<int>(i) - 1);
    }
    return coords;
}

namespace {

void check_strictly_decreasing(const std::vector<int>& seq, const char* name) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) throw std::invalid_argument(std::string(name) + " must be non-negative");
        if (i > 0 && seq[i] >= seq[i - 1]) {
            throw std::invalid_argument(std::string(name) + " must be strictly decreasing");
        }
    }
}

}  // namespace

Partition from_frobenius(const FrobeniusCoords& coords) {
    if (coords.arms.size() != coords.legs.size()) {
        throw std::invalid_argument("Frobenius arms and legs differ in length");
    }
    check_strictly_decreasing(coords.arms, "Frobenius arms");
    check_strictly_decreasing(coords.legs, "Frobenius legs");
    const std::size_t d = coords.arms.size();
    if (d == 0) return Partition{};
    // Row i < d has length a_i + i + 1. Rows below the diagonal block are read
    // off the legs: row r >= d has length #{j : b_j + j >= r}.
    std::vector<int> rows;
    for (std::size_t i = 0; i < d; ++i) rows.push_back(coords.arms[i] + static_cast<int>(i) + 1);
    const int depth = coords.legs[0] + 1;
    for (int r = static_cast<int>(d); r < depth; ++r) {
        int len = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (coords.legs[j] + static_cast<int>(j) >= r) ++len;
        }
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

Partition phi(const Partition& mu) {
    if (!mu.has_distinct_odd_parts()) {
        throw std::invalid_argument("phi requires distinct odd parts, got (" + mu.to_string() + ")");
    }
    FrobeniusCoords coords;
    for (int part : mu.parts()) coords.arms.push_back((part - 1) / 2);
    coords.legs = coords.arms;
    return from_frobenius(coords);
}

Partition diagonal_hooks(const Partition& lambda) {
    const FrobeniusCoords coords = to_frobenius(lambda);
    std::vector<int> hooks;
    for (std::size_t i = 0; i < coords.arms.size(); ++i) {
        hooks.push_back(coords.arms[i] + coords.legs[i] + 1);
    }
    return Partition(std::move(hooks));
}

int hook_length(const Partition& lambda, int row, int col) {
    const int arm = lambda[static_cast<std::size_t>(row)] - col - 1;
    int leg = 0;
    while (static_cast<std::size_t>(row + leg + 1) < lambda.length() &&
           lambda[static_cast<std::size_t>(row + leg + 1)] > col) {
        ++leg;
    }
    return arm + leg + 1;
}

BigInt dimension(const Partition& lambda) {
    BigInt hooks = 1;
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) hooks *= hook_length(lambda, static_cast<int>(r), c);
    }
    return exact_div(factorial(lambda.n()), hooks, "hook length formula");
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, bool distinct_odd,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (distinct_odd && part % 2 == 0) continue;
        prefix.push_back(part);
        enumerate(remaining - part, distinct_odd ? part - 1 : part, prefix, distinct_odd, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(n, n, prefix, false, out);
    return out;
}

std::vector<Partition> distinct_odd_partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("distinct_odd_partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(n, n, prefix, true, out);
    return out;
}

}  // namespace altchar
