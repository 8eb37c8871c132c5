#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "altchar/errors.hpp"
#include "altchar/number_theory.hpp"
#include "altchar/permutation.hpp"
#include "oracles.hpp"

using namespace altchar;

namespace {

bool close(oracle::Complex x, double re, double im, double tol = 1e-9) {
    return std::abs(x.real() - re) < tol && std::abs(x.imag() - im) < tol;
}

}  // namespace

TEST_CASE("jacobi: worked examples and domain") {
    for (std::int64_t n = 1; n < 60; n += 2) CHECK(jacobi(1, n) == 1);
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(2, 3) == -1);
    CHECK(jacobi(2, 5) == -1);
    CHECK(jacobi(3, 15) == 0);
    CHECK(jacobi(-1, 3) == -1);
    CHECK(jacobi(-1, 5) == 1);
    CHECK_THROWS_AS(jacobi(1, 4), std::domain_error);
    CHECK_THROWS_AS(jacobi(1, 0), std::domain_error);
    CHECK_THROWS_AS(jacobi(1, -3), std::domain_error);
}

TEST_CASE("jacobi is multiplicative and reduces to Legendre symbols") {
    for (std::int64_t n = 1; n <= 99; n += 2) {
        for (std::int64_t a = -20; a <= 99; ++a) {
            CHECK(jacobi(a, n) == oracle::jacobi_by_factors(a, n));
        }
    }
    for (std::int64_t n = 1; n <= 99; n += 2) {
        for (std::int64_t a = 1; a <= 99; ++a) {
            for (std::int64_t b = 1; b <= 99; b += 7) {
                CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
            }
        }
    }
    for (std::int64_t m = 1; m <= 99; m += 2) {
        for (std::int64_t n = 1; n <= 99; n += 2) {
            for (std::int64_t a = 1; a <= 99; a += 5) {
                CHECK(jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n));
            }
        }
    }
}

TEST_CASE("jacobi equals the sign of multiplication on Z/M") {
    for (std::int64_t M = 1; M <= 45; M += 2) {
        for (std::int64_t i = 1; i < M || (M == 1 && i == 1); ++i) {
            if (std::gcd(i, M) != 1) continue;
            std::vector<int> images(static_cast<std::size_t>(M));
            for (std::int64_t x = 0; x < M; ++x) images[static_cast<std::size_t>(x)] = static_cast<int>(i * x % M);
            const Permutation mult(images);
            CAPTURE(M);
            CAPTURE(i);
            CHECK(jacobi(i, M) == sign(mult));
            CHECK(jacobi(i, M) == oracle::multiplication_sign(i, M));
        }
    }
}

TEST_CASE("basic arithmetic helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(is_square(0));
    CHECK(is_square(405 * 5));
    CHECK_FALSE(is_square(405));
    CHECK(is_square_free(15));
    CHECK_FALSE(is_square_free(45));
    CHECK(totient(1) == 1);
    CHECK(totient(45) == 24);
    CHECK(moebius(1) == 1);
    CHECK(moebius(15) == 1);
    CHECK(moebius(3) == -1);
    CHECK(moebius(9) == 0);
}

TEST_CASE("unit_sum: worked examples") {
    CHECK(unit_sum(3, 1, 0) == 2);
    CHECK(unit_sum(3, 1, 1) == -1);
    CHECK(unit_sum(3, 2, 3) == -3);
    CHECK_THROWS_AS(unit_sum(4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(unit_sum(3, 0, 0), std::invalid_argument);
}

TEST_CASE("twisted_sum: worked examples") {
    const GaussPhase a = twisted_sum(3, 1, 1);
    CHECK(a == GaussPhase(Rational(1), 1, 3));
    CHECK(close({a.real(), a.imag()}, 0.0, std::sqrt(3.0)));
    const GaussPhase b = twisted_sum(5, 1, 2);
    CHECK(b == GaussPhase(Rational(-1), 0, 5));
    CHECK(twisted_sum(3, 2, 1).is_zero());
}

TEST_CASE("unit and twisted sums agree with direct summation over odd prime powers <= 243") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                           73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                           151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227,
                           229, 233, 239, 241}) {
        std::int64_t q = p;
        for (int f = 1; q <= 243; ++f, q *= p) {
            for (std::int64_t i = 0; i < q; ++i) {
                CAPTURE(p);
                CAPTURE(f);
                CAPTURE(i);
                const auto direct = oracle::unit_sum(q, i);
                CHECK(close(direct, static_cast<double>(unit_sum(p, f, i)), 0.0, 1e-9 * q));
                const GaussPhase t = twisted_sum(p, f, i);
                CHECK(close(oracle::twisted_sum(p, f, i), t.real(), t.imag(), 1e-9 * q));
            }
        }
    }
}

TEST_CASE("ramanujan: worked examples") {
    for (std::int64_t i = -5; i <= 5; ++i) CHECK(ramanujan(1, i) == 1);
    for (std::int64_t q = 1; q <= 30; ++q) CHECK(ramanujan(q, 0) == totient(q));
    CHECK(ramanujan(3, 3) == 2);
    CHECK(ramanujan(5, 3) == -1);
    CHECK(ramanujan(15, 3) == -2);
    CHECK_THROWS_AS(ramanujan(0, 1), std::invalid_argument);
}

TEST_CASE("ramanujan sums: gcd invariance, multiplicativity, direct summation") {
    for (std::int64_t q = 1; q <= 200; ++q) {
        for (std::int64_t i = 0; i < q; ++i) {
            CHECK(ramanujan(q, i) == ramanujan(q, std::gcd(i, q)));
        }
    }
    for (std::int64_t q = 1; q <= 60; ++q) {
        for (std::int64_t i = -q; i <= q; ++i) {
            CHECK(close(oracle::unit_sum(q, i), static_cast<double>(ramanujan(q, i)), 0.0, 1e-8));
        }
    }
    for (std::int64_t a = 1; a <= 20; ++a) {
        for (std::int64_t b = 1; b <= 20; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (std::int64_t i = 0; i < a * b; ++i) {
                CHECK(ramanujan(a * b, i) == ramanujan(a, i) * ramanujan(b, i));
            }
        }
    }
    for (std::int64_t p : {3, 5, 7}) {
        std::int64_t q = p;
        for (int f = 1; f <= 3; ++f, q *= p) {
            for (std::int64_t i = 0; i < q; ++i) CHECK(ramanujan(q, i) == unit_sum(p, f, i));
        }
    }
}

TEST_CASE("Gauss phases: squares and products") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        const GaussPhase g = gauss_sum(p);
        const std::int64_t expected = (p % 4 == 1 ? 1 : -1) * p;
        CHECK(phase_to_integer(g * g) == expected);
        // Classical evaluation against the direct twisted sum.
        const auto direct = oracle::twisted_sum(p, 1, 1);
        CHECK(close(direct, g.real(), g.imag(), 1e-9));
    }
    const GaussPhase i3 = gauss_sum(3);
    const GaussPhase r5 = gauss_sum(5);
    CHECK(phase_to_integer(i3 * i3) == -3);
    CHECK(phase_to_integer(r5 * r5) == 5);
    CHECK_THROWS_AS(phase_to_integer(i3 * r5), InternalError);
    CHECK_THROWS_AS(phase_to_integer(GaussPhase(Rational(1, 2), 0, 1)), InternalError);
    const std::vector<GaussPhase> factors{i3, i3, r5, r5};
    CHECK(phase_to_integer(phase_product(factors)) == -15);
    CHECK(phase_to_integer(GaussPhase::zero()) == 0);
}

TEST_CASE("GaussPhase normalisation") {
    const GaussPhase x(Rational(3), 2, 12);
    CHECK(x.rational_factor() == Rational(-6));
    CHECK(x.quarter_turns() == 0);
    CHECK(x.radicand() == 3);
    const GaussPhase y(Rational(1), 3, 5);
    CHECK(y.rational_factor() == Rational(-1));
    CHECK(y.quarter_turns() == 1);
    CHECK(GaussPhase(Rational(0), 1, 7) == GaussPhase::zero());
    CHECK_THROWS_AS(GaussPhase(Rational(1), 0, 0), std::invalid_argument);
    CHECK(y.to_string() == "-1*i*sqrt(5)");
}
