#include "altchar/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "altchar/cycle_type.hpp"
#include "altchar/errors.hpp"

namespace altchar {

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex mn_mutex;
std::map<MnKey, BigInt> mn_cache;

BigInt mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t next) {
    if (next == mu.size()) return lambda.empty() ? BigInt(1) : BigInt(0);

    MnKey key{lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(next), mu.end())};
    {
        std::lock_guard lock(mn_mutex);
        if (auto it = mn_cache.find(key); it != mn_cache.end()) return it->second;
    }

    // Beta-set: β_i = λ_i + (ℓ - 1 - i), strictly decreasing. Removing a rim
    // hook of length k moves one bead from b to b - k; the sign is the parity
    // of the beads jumped over.
    const auto len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

    const int k = mu[next];
    BigInt total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        const int from = beta[idx];
        const int to = from - k;
        if (to < 0) continue;
        if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta) {
            if (b > to && b < from) ++jumped;
        }
        std::vector<int> moved = beta;
        moved[idx] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> shape;
        for (int i = 0; i < len; ++i) {
            const int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
            if (part > 0) shape.push_back(part);
        }
        const BigInt sub = mn_recursive(shape, mu, next + 1);
        if (jumped % 2 == 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }

    std::lock_guard lock(mn_mutex);
    mn_cache.emplace(std::move(key), total);
    return total;
}

const char* tag_suffix(bool plus) { return plus ? ":+" : ":-"; }

/// Splits "5,3:+" into ("5,3", '+'); tag is 0 when absent.
std::pair<std::string_view, char> split_label(std::string_view label) {
    const auto colon = label.find(':');
    if (colon == std::string_view::npos) return {label, 0};
    const std::string_view tag = label.substr(colon + 1);
    if (tag != "+" && tag != "-") {
        throw ParseError("split tag must be ':+' or ':-' in '" + std::string(label) + "'");
    }
    return {label.substr(0, colon), tag.front()};
}

void require_an_degree(int n) {
    if (n < 2) throw std::invalid_argument("alternating group needs n >= 2");
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) {
        throw std::invalid_argument("character size mismatch: |" + lambda.to_string() +
                                    "| != |" + mu.to_string() + "|");
    }
    return mn_recursive(lambda.parts(), mu.parts(), 0);
}

AnClass::AnClass(Partition mu, ClassTag tag) : mu_(std::move(mu)), tag_(tag) {
    if (!in_alternating_group(mu_)) {
        throw std::invalid_argument("cycle type (" + mu_.to_string() + ") is odd");
    }
    if (mu_.has_distinct_odd_parts() != (tag_ != ClassTag::Unsplit)) {
        throw std::invalid_argument(
            mu_.has_distinct_odd_parts()
                ? "cycle type (" + mu_.to_string() + ") splits in A_n and needs a :+ or :- tag"
                : "cycle type (" + mu_.to_string() + ") does not split in A_n; drop the tag");
    }
}

AnClass AnClass::parse(std::string_view label) {
    auto [body, tag] = split_label(label);
    Partition mu = Partition::parse(body);
    const ClassTag t = tag == 0 ? ClassTag::Unsplit : tag == '+' ? ClassTag::Plus : ClassTag::Minus;
    try {
        return AnClass(std::move(mu), t);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string AnClass::label() const {
    std::string out = mu_.to_string();
    if (tag_ != ClassTag::Unsplit) out += tag_suffix(tag_ == ClassTag::Plus);
    return out;
}

AnIrrep::AnIrrep(const Partition& lambda, IrrepTag tag) : tag_(tag) {
    const Partition conj = conjugate(lambda);
    const bool self_conjugate = conj == lambda;
    if (self_conjugate && tag == IrrepTag::Whole) {
        throw std::invalid_argument("self-conjugate (" + lambda.to_string() +
                                    ") splits in A_n and needs a :+ or :- tag");
    }
    if (!self_conjugate && tag != IrrepTag::Whole) {
        throw std::invalid_argument("(" + lambda.to_string() +
                                    ") is not self-conjugate; drop the tag");
    }
    lambda_ = std::max(lambda, conj);
}

AnIrrep AnIrrep::parse(std::string_view label) {
    auto [body, tag] = split_label(label);
    Partition lambda = Partition::parse(body);
    const IrrepTag t = tag == 0 ? IrrepTag::Whole : tag == '+' ? IrrepTag::Plus : IrrepTag::Minus;
    try {
        return AnIrrep(lambda, t);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string AnIrrep::label() const {
    std::string out = lambda_.to_string();
    if (tag_ != IrrepTag::Whole) out += tag_suffix(tag_ == IrrepTag::Plus);
    return out;
}

std::vector<AnClassInfo> an_classes(int n) {
    require_an_degree(n);
    std::vector<AnClassInfo> out;
    for (const Partition& mu : partitions_of(n)) {
        if (!in_alternating_group(mu)) continue;
        const BigInt size = class_size_sn(mu);
        if (mu.has_distinct_odd_parts()) {
            const BigInt half = exact_div(size, 2, "split class size");
            out.push_back({AnClass(mu, ClassTag::Plus), half});
            out.push_back({AnClass(mu, ClassTag::Minus), half});
        } else {
            out.push_back({AnClass(mu, ClassTag::Unsplit), size});
        }
    }
    return out;
}

BigInt an_dimension(const AnIrrep& v) {
    const BigInt dim = dimension(v.lambda());
    return v.is_split() ? exact_div(dim, 2, "split dimension") : dim;
}

std::vector<AnIrrepInfo> an_irreps(int n) {
    require_an_degree(n);
    std::vector<AnIrrepInfo> out;
    for (const Partition& lambda : partitions_of(n)) {
        const Partition conj = conjugate(lambda);
        if (conj == lambda) {
            for (IrrepTag tag : {IrrepTag::Plus, IrrepTag::Minus}) {
                AnIrrep v(lambda, tag);
                out.push_back({v, an_dimension(v)});
            }
        } else if (lambda > conj) {
            AnIrrep v(lambda, IrrepTag::Whole);
            out.push_back({v, an_dimension(v)});
        }
    }
    return out;
}

QuadValue an_character(const AnIrrep& v, const AnClass& c) {
    if (v.n() != c.n()) {
        throw std::invalid_argument("irrep " + v.label() + " and class " + c.label() +
                                    " have different degrees");
    }
    require_an_degree(v.n());
    const BigInt chi = mn_character(v.lambda(), c.mu());
    if (!v.is_split()) return QuadValue::integer(chi);
    if (c.is_split() && v.lambda() == phi(c.mu())) {
        const CycleTypeData data = cycle_type_data(c.mu());
        const int eps = *data.epsilon;
        std::int64_t root_scale = 0;
        std::int64_t disc = 0;
        split_square(eps * data.product, root_scale, disc);
        const bool same = (v.tag() == IrrepTag::Plus) == (c.tag() == ClassTag::Plus);
        return QuadValue(eps, same ? root_scale : -root_scale, disc);
    }
    return QuadValue::half(chi);
}

CharacterTable character_table_an(int n, int bound) {
    if (n > bound) {
        throw BoundExceeded("character table for n = " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(bound));
    }
    CharacterTable table;
    table.n = n;
    table.irreps = an_irreps(n);
    table.classes = an_classes(n);
    table.values.reserve(table.irreps.size());
    for (const auto& irrep : table.irreps) {
        std::vector<QuadValue> row;
        row.reserve(table.classes.size());
        for (const auto& cls : table.classes) row.push_back(an_character(irrep.irrep, cls.cls));
        table.values.push_back(std::move(row));
    }
    return table;
}

}  // namespace altchar
