#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "altchar/characters.hpp"
#include "altchar/cycle_type.hpp"
#include "altchar/errors.hpp"
#include "altchar/quad_value.hpp"
#include "oracles.hpp"

using namespace altchar;

namespace {

const AnClassInfo& find_class(const std::vector<AnClassInfo>& all, const std::string& label) {
    for (const auto& c : all) {
        if (c.cls.label() == label) return c;
    }
    throw std::runtime_error("no class " + label);
}

}  // namespace

TEST_CASE("QuadValue arithmetic") {
    const QuadValue omega(-1, 1, -3);
    CHECK(omega.to_string() == "(-1 + sqrt(-3))/2");
    const auto z = omega.to_complex();
    CHECK(std::abs(z - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-12);
    // ω² = conj(ω), ω + conj(ω) = -1.
    CHECK(omega * omega == omega.galois_conjugate());
    CHECK(omega + omega.galois_conjugate() == QuadValue::integer(-1));
    CHECK(QuadValue(2, 2, 4) == QuadValue::integer(3));
    CHECK(QuadValue(0, 1, 12) == QuadValue(0, 2, 3));
    CHECK(QuadValue::half(3).to_string() == "3/2");
    CHECK_FALSE(QuadValue::half(3).is_integer());
    CHECK_THROWS_AS(QuadValue(0, 1, -3) + QuadValue(0, 1, 5), std::domain_error);
    CHECK_THROWS_AS(QuadValue(0, 1, -3) * QuadValue(0, 1, 5), std::domain_error);
    std::int64_t k = 0;
    std::int64_t d = 0;
    split_square(-180, k, d);
    CHECK(k == 6);
    CHECK(d == -5);
}

TEST_CASE("mn_character: worked examples") {
    for (int n = 1; n <= 10; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            CHECK(mn_character(Partition{n}, mu) == 1);
            const int expected = (n - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
            CHECK(mn_character(conjugate(Partition{n}), mu) == expected);
        }
    }
    CHECK(mn_character(Partition{2, 2}, Partition{3, 1}) == -1);
    CHECK_THROWS_AS(mn_character(Partition{2, 2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("mn_character equals the alternant formula, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (const Partition& mu : partitions_of(n)) {
                CAPTURE(lambda.to_string());
                CAPTURE(mu.to_string());
                CHECK(mn_character(lambda, mu) == oracle::frobenius_character(lambda, mu));
            }
        }
    }
}

TEST_CASE("symmetric group characters: conjugation twist and orthogonality, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        const auto parts = partitions_of(n);
        for (const Partition& lambda : parts) {
            for (const Partition& mu : parts) {
                CHECK(mn_character(conjugate(lambda), mu) == cycle_type_sign(mu) * mn_character(lambda, mu));
            }
        }
        for (const Partition& mu : parts) {
            for (const Partition& nu : parts) {
                BigInt sum = 0;
                for (const Partition& lambda : parts) sum += mn_character(lambda, mu) * mn_character(lambda, nu);
                CHECK(sum == (mu == nu ? centralizer_order_sn(mu) : BigInt(0)));
            }
        }
        for (const Partition& lambda : parts) {
            CHECK(mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
                  dimension(lambda));
        }
    }
}

TEST_CASE("AnClass and AnIrrep labels") {
    CHECK(AnClass::parse("5,3:+").tag() == ClassTag::Plus);
    CHECK(AnClass::parse("5,3:-").label() == "5,3:-");
    CHECK(AnClass::parse("3,3").tag() == ClassTag::Unsplit);
    CHECK_THROWS_AS(AnClass::parse("5,3"), std::invalid_argument);
    CHECK_THROWS_AS(AnClass::parse("3,3:+"), std::invalid_argument);
    CHECK_THROWS_AS(AnClass::parse("2,1"), std::invalid_argument);
    CHECK_THROWS_AS(AnClass::parse("5,3:x"), ParseError);

    CHECK(AnIrrep(Partition{2, 2, 2, 2}, IrrepTag::Whole).lambda() == Partition{4, 4});
    CHECK(AnIrrep::parse("1,1,1,1,1,1,1,1").label() == "8");
    CHECK(AnIrrep::parse("3,3,2:-").tag() == IrrepTag::Minus);
    CHECK_THROWS_AS(AnIrrep::parse("3,3,2"), std::invalid_argument);
    CHECK_THROWS_AS(AnIrrep::parse("4,4:+"), std::invalid_argument);
}

TEST_CASE("A_n classes and irreps: worked examples") {
    const auto c3 = an_classes(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].cls.label() == "3:+");
    CHECK(c3[1].cls.label() == "3:-");
    CHECK(c3[2].cls.label() == "1,1,1");
    const auto i3 = an_irreps(3);
    REQUIRE(i3.size() == 3);
    CHECK(i3[0].irrep.label() == "3");
    CHECK(i3[1].irrep.label() == "2,1:+");
    CHECK(i3[2].irrep.label() == "2,1:-");

    CHECK(an_classes(4).size() == 4);
    CHECK(an_irreps(4).size() == 4);
    std::vector<BigInt> sizes;
    for (const auto& c : an_classes(4)) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<BigInt>{1, 3, 4, 4});

    CHECK(an_dimension(AnIrrep::parse("3,3,2:+")) == 21);
    CHECK(an_dimension(AnIrrep::parse("3,3,2:-")) == 21);
    CHECK(find_class(an_classes(6), "3,3").cls.tag() == ClassTag::Unsplit);
}

TEST_CASE("A_n enumerations are complete, n <= 14") {
    for (int n = 2; n <= 14; ++n) {
        const auto classes = an_classes(n);
        const auto irreps = an_irreps(n);
        CHECK(classes.size() == irreps.size());
        BigInt total = 0;
        for (const auto& c : classes) {
            total += c.size;
            CHECK(in_alternating_group(c.cls.mu()));
            CHECK(c.cls.is_split() == c.cls.mu().has_distinct_odd_parts());
            CHECK(c.size * (c.cls.is_split() ? 2 : 1) == class_size_sn(c.cls.mu()));
        }
        CHECK(2 * total == factorial(n));
        BigInt squares = 0;
        for (const auto& v : irreps) {
            const Partition& lambda = v.irrep.lambda();
            CHECK(v.irrep.is_split() == is_self_conjugate(lambda));
            if (!v.irrep.is_split()) CHECK(lambda > conjugate(lambda));
            CHECK(v.dimension * (v.irrep.is_split() ? 2 : 1) == dimension(lambda));
            squares += v.dimension * v.dimension;
        }
        CHECK(2 * squares == factorial(n));
    }
}

TEST_CASE("an_character: worked examples") {
    const AnIrrep plus = AnIrrep::parse("2,1:+");
    CHECK(an_character(plus, AnClass::parse("3:+")) == QuadValue(-1, 1, -3));
    CHECK(an_character(plus, AnClass::parse("3:-")) == QuadValue(-1, -1, -3));
    CHECK(an_character(plus, AnClass::parse("1,1,1")) == QuadValue::integer(1));

    const AnIrrep v = AnIrrep::parse("3,3,2:+");
    const QuadValue at_plus = an_character(v, AnClass::parse("5,3:+"));
    const QuadValue at_minus = an_character(v, AnClass::parse("5,3:-"));
    CHECK(at_plus == QuadValue(-1, 1, -15));
    CHECK(at_minus == QuadValue(-1, -1, -15));
    CHECK(an_character(AnIrrep::parse("3,3,2:-"), AnClass::parse("5,3:+")) == at_minus);
    CHECK_THROWS_AS(an_character(v, AnClass::parse("3:+")), std::invalid_argument);
}

TEST_CASE("the order-3 alternating group table is the cube-root-of-unity table") {
    const CharacterTable t = character_table_an(3);
    const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    // Rows: trivial, (2,1):+, (2,1):-. Columns: 3:+, 3:-, identity.
    const std::complex<double> expected[3][3] = {{1, 1, 1}, {w, std::conj(w), 1}, {std::conj(w), w, 1}};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) CHECK(std::abs(t.values[r][c].to_complex() - expected[r][c]) < 1e-12);
    }
}

TEST_CASE("A_n character tables: split relations and restriction, n <= 12") {
    for (int n = 2; n <= 12; ++n) {
        const CharacterTable t = character_table_an(n);
        for (std::size_t r = 0; r < t.irreps.size(); ++r) {
            const AnIrrep& v = t.irreps[r].irrep;
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                const AnClass& cls = t.classes[c].cls;
                const QuadValue& x = t.values[r][c];
                if (!v.is_split()) {
                    CHECK(x == QuadValue::integer(mn_character(v.lambda(), cls.mu())));
                    continue;
                }
                const AnIrrep other(v.lambda(), v.tag() == IrrepTag::Plus ? IrrepTag::Minus : IrrepTag::Plus);
                // χ⁺ + χ⁻ restricts χ_λ.
                CHECK(x + an_character(other, cls) == QuadValue::integer(mn_character(v.lambda(), cls.mu())));
                if (cls.is_split()) {
                    const AnClass swapped(cls.mu(), cls.tag() == ClassTag::Plus ? ClassTag::Minus : ClassTag::Plus);
                    CHECK(an_character(other, swapped) == x);
                } else {
                    CHECK(an_character(other, cls) == x);
                }
            }
        }
    }
}

TEST_CASE("A_n character tables: numeric orthogonality, n <= 12") {
    for (int n = 2; n <= 12; ++n) {
        const CharacterTable t = character_table_an(n);
        const double order = factorial(n).convert_to<double>() / 2.0;
        const std::size_t k = t.classes.size();
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t s = 0; s < k; ++s) {
                std::complex<double> sum = 0.0;
                for (std::size_t c = 0; c < k; ++c) {
                    sum += t.classes[c].size.convert_to<double>() * t.values[r][c].to_complex() *
                           std::conj(t.values[s][c].to_complex());
                }
                CHECK(std::abs(sum / order - (r == s ? 1.0 : 0.0)) < 1e-8);
            }
        }
    }
}

TEST_CASE("character_table_an guards its size") {
    CHECK_THROWS_AS(character_table_an(15), BoundExceeded);
    CHECK_THROWS_AS(character_table_an(6, 5), BoundExceeded);
}
