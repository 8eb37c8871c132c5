#include "altchar/global_classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "altchar/cycle_type.hpp"
#include "altchar/errors.hpp"

namespace altchar {

ClassTag split_class_of(const Permutation& sigma) {
    const Partition mu = cycle_type(sigma);
    if (!mu.has_distinct_odd_parts()) {
        throw std::invalid_argument("split_class_of needs distinct odd cycle lengths, got (" +
                                    mu.to_string() + ")");
    }
    const auto rho = conjugator(Permutation::standard_rep(mu), sigma);
    ensure(rho.has_value(), "no conjugator between permutations of equal cycle type");
    return sign(*rho) == 1 ? ClassTag::Plus : ClassTag::Minus;
}

AnClass an_class_of(const Permutation& sigma) {
    Partition mu = cycle_type(sigma);
    if (!mu.has_distinct_odd_parts()) return AnClass(std::move(mu), ClassTag::Unsplit);
    const ClassTag tag = split_class_of(sigma);
    return AnClass(std::move(mu), tag);
}

Permutation representative(const AnClass& c) {
    Permutation w = Permutation::standard_rep(c.mu());
    if (c.tag() != ClassTag::Minus) return w;
    return conjugate_by(w, Permutation::transposition(c.n(), 0, 1));
}

bool within_global_hypothesis(const Partition& mu) {
    if (mu.length() < 2 || !mu.all_parts_odd()) return false;
    for (int part : mu.parts()) {
        if (mu.multiplicity(part) > 2) return false;
    }
    return true;
}

GlobalVerdict is_global_class(const Partition& mu) {
    GlobalVerdict verdict;
    verdict.mu = mu;
    if (!within_global_hypothesis(mu)) {
        verdict.in_scope = false;
        verdict.rule =
            "outside the closed-form hypothesis (at least two parts, all odd, none thrice); "
            "undecided";
        return verdict;
    }
    static const std::vector<Partition> exceptions{
        Partition{3, 1}, Partition{3, 3}, Partition{5, 3}, Partition{3, 3, 1, 1}};
    if (std::find(exceptions.begin(), exceptions.end(), mu) != exceptions.end()) {
        verdict.is_global = false;
        verdict.rule = "global.exception (" + mu.to_string() + ")";
    } else {
        verdict.is_global = true;
        verdict.rule = "global.odd-parts-at-most-twice";
    }
    return verdict;
}

namespace {

struct CycleBlock {
    int length = 0;
    std::vector<int> starts;  // first point of each cycle of this length
};

std::vector<CycleBlock> blocks_of(const Partition& mu) {
    std::vector<CycleBlock> blocks;
    int start = 0;
    for (int part : mu.parts()) {
        if (blocks.empty() || blocks.back().length != part) blocks.push_back({part, {}});
        blocks.back().starts.push_back(start);
        start += part;
    }
    return blocks;
}

// Elements of ∏_k (C_k ≀ S_{m_k}): block t of length k goes to block π(t),
// rotated by r_t.
void enumerate_blocks(const std::vector<CycleBlock>& blocks, std::size_t which,
                      std::vector<int>& images,
                      const std::function<void(const Permutation&)>& visit) {
    if (which == blocks.size()) {
        visit(Permutation(images));
        return;
    }
    const CycleBlock& block = blocks[which];
    const std::size_t count = block.starts.size();
    std::vector<int> arrangement(count);
    std::iota(arrangement.begin(), arrangement.end(), 0);
    do {
        std::vector<int> rotation(count, 0);
        while (true) {
            for (std::size_t t = 0; t < count; ++t) {
                const int src = block.starts[t];
                const int dst = block.starts[static_cast<std::size_t>(arrangement[t])];
                for (int x = 0; x < block.length; ++x) {
                    images[static_cast<std::size_t>(src + x)] =
                        dst + (x + rotation[t]) % block.length;
                }
            }
            enumerate_blocks(blocks, which + 1, images, visit);
            std::size_t pos = 0;
            while (pos < count && ++rotation[pos] == block.length) rotation[pos++] = 0;
            if (pos == count) break;
        }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

}  // namespace

void for_each_centralizer_element(const Partition& mu,
                                  const std::function<void(const Permutation&)>& visit) {
    std::vector<int> images(static_cast<std::size_t>(mu.n()), 0);
    enumerate_blocks(blocks_of(mu), 0, images, visit);
}

namespace {

// Beyond this many S_n-centralizer elements the class census is used instead
// of explicit enumeration.
constexpr int kEnumerationCap = 50000;

}  // namespace

GlobalVerdict global_brute_force(const Partition& mu, int bound, CentralizerMethod method) {
    if (mu.n() > bound) {
        throw BoundExceeded("brute-force global check for n = " + std::to_string(mu.n()) +
                            " exceeds the bound " + std::to_string(bound));
    }
    if (mu.n() < 2) throw std::invalid_argument("alternating group needs n >= 2");
    if (!in_alternating_group(mu)) {
        throw std::invalid_argument("cycle type (" + mu.to_string() + ") is not in A_n");
    }

    std::map<std::pair<Partition, ClassTag>, BigInt> class_counts;
    BigInt order = 0;
    if (method == CentralizerMethod::Auto) {
        method = centralizer_order_sn(mu) <= kEnumerationCap || mu.has_distinct_odd_parts()
                     ? CentralizerMethod::Enumerate
                     : CentralizerMethod::Census;
    }
    if (method == CentralizerMethod::Census && mu.has_distinct_odd_parts()) {
        throw std::invalid_argument("class census cannot resolve split tags for (" +
                                    mu.to_string() + ")");
    }
    if (method == CentralizerMethod::Enumerate) {
        for_each_centralizer_element(mu, [&](const Permutation& x) {
            if (sign(x) != 1) return;
            ++order;
            const AnClass cls = an_class_of(x);
            class_counts[{cls.mu(), cls.tag()}] += 1;
        });
    } else {
        // The S_n centralizer holds an odd element here, and conjugating by
        // it swaps the two halves of every split class, so they are equally
        // populated.
        for (const auto& [type, count] : centralizer_cycle_types(mu)) {
            if (!in_alternating_group(type)) continue;
            order += count;
            if (type.has_distinct_odd_parts()) {
                const BigInt half = exact_div(count, 2, "split class census");
                class_counts[{type, ClassTag::Plus}] += half;
                class_counts[{type, ClassTag::Minus}] += half;
            } else {
                class_counts[{type, ClassTag::Unsplit}] += count;
            }
        }
    }

    GlobalVerdict verdict;
    verdict.mu = mu;
    verdict.in_scope = within_global_hypothesis(mu);
    verdict.centralizer_order = order;
    verdict.rule = "global.brute-force: (1/|Z|) sum of characters over the A_n-centralizer";
    bool all_present = true;
    for (const auto& info : an_irreps(mu.n())) {
        QuadValue sum;
        for (const auto& [key, count] : class_counts) {
            sum += an_character(info.irrep, AnClass(key.first, key.second)) * count;
        }
        ensure(sum.is_rational(), "irrational inner product for " + info.irrep.label());
        const BigInt multiplicity = exact_div(sum.a(), 2 * order, "induced inner product");
        ensure(multiplicity >= 0, "negative inner product for " + info.irrep.label());
        if (multiplicity == 0) all_present = false;
        IrrepMultiplicity entry{info.irrep, multiplicity};
        if (!verdict.witness || multiplicity < verdict.witness->multiplicity) verdict.witness = entry;
        verdict.inner_products.push_back(std::move(entry));
    }
    verdict.is_global = all_present;
    return verdict;
}

namespace {

using TypeCounts = std::map<std::vector<int>, BigInt>;

TypeCounts convolve(const TypeCounts& a, const TypeCounts& b) {
    TypeCounts out;
    for (const auto& [pa, ca] : a) {
        for (const auto& [pb, cb] : b) {
            std::vector<int> parts = pa;
            parts.insert(parts.end(), pb.begin(), pb.end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            out[parts] += ca * cb;
        }
    }
    return out;
}

// Cycle types of C_k ≀ S_m acting on m·k points.
TypeCounts wreath_cycle_types(int k, int m) {
    TypeCounts total;
    for (const Partition& top : partitions_of(m)) {
        const BigInt top_count = class_size_sn(top);
        TypeCounts acc{{{}, 1}};
        for (int c : top.parts()) {
            TypeCounts one;
            BigInt per_r = 1;
            for (int t = 1; t < c; ++t) per_r *= k;
            for (int r = 0; r < k; ++r) {
                const int g = std::gcd(r, k);
                one[std::vector<int>(static_cast<std::size_t>(g), c * k / g)] += per_r;
            }
            acc = convolve(acc, one);
        }
        for (const auto& [parts, count] : acc) total[parts] += count * top_count;
    }
    return total;
}

}  // namespace

std::map<Partition, BigInt> centralizer_cycle_types(const Partition& mu) {
    TypeCounts acc{{{}, 1}};
    for (const auto& block : blocks_of(mu)) {
        acc = convolve(acc, wreath_cycle_types(block.length, static_cast<int>(block.starts.size())));
    }
    std::map<Partition, BigInt> out;
    for (auto& [parts, count] : acc) out.emplace(Partition(parts), count);
    return out;
}

bool sn_global_brute_force(const Partition& mu) {
    const auto type_counts = centralizer_cycle_types(mu);
    const BigInt order = centralizer_order_sn(mu);
    for (const Partition& lambda : partitions_of(mu.n())) {
        BigInt sum = 0;
        for (const auto& [type, count] : type_counts) sum += mn_character(lambda, type) * count;
        const BigInt multiplicity = exact_div(sum, order, "S_n induced inner product");
        ensure(multiplicity >= 0, "negative S_n inner product");
        if (multiplicity == 0) return false;
    }
    return true;
}

}  // namespace altchar
