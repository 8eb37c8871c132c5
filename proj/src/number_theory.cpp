#include "altchar/number_theory.hpp"

#include <cmath>
#include <stdexcept>

#include "altchar/cycle_type.hpp"
#include "altchar/errors.hpp"
#include "altchar/quad_value.hpp"

namespace altchar {

int jacobi(std::int64_t a, std::int64_t n) {
    if (n <= 0 || n % 2 == 0) {
        throw std::domain_error("Jacobi symbol needs an odd positive modulus, got " +
                                std::to_string(n));
    }
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t p = 2; p * p <= x; ++p) {
        if (x % p == 0) return false;
    }
    return true;
}

bool is_square(std::int64_t x) {
    if (x < 0) return false;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x;
}

bool is_square_free(std::int64_t x) {
    for (auto [p, e] : factorize(x)) {
        if (e > 1) return false;
    }
    return true;
}

std::int64_t totient(std::int64_t q) {
    std::int64_t result = q;
    for (auto [p, e] : factorize(q)) result = result / p * (p - 1);
    return result;
}

int moebius(std::int64_t q) {
    int result = 1;
    for (auto [p, e] : factorize(q)) {
        if (e > 1) return 0;
        result = -result;
    }
    return result;
}

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

void require_odd_prime_power(std::int64_t p, int f) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("expected an odd prime");
    if (f < 1) throw std::invalid_argument("expected a positive exponent");
}

/// p-adic valuation of i modulo p^f, capped at f.
int valuation_mod(std::int64_t p, int f, std::int64_t i, std::int64_t& unit) {
    std::int64_t r = mod_floor(i, ipow(p, f));
    if (r == 0) {
        unit = 1;
        return f;
    }
    int d = 0;
    while (r % p == 0) {
        r /= p;
        ++d;
    }
    unit = r;
    return d;
}

}  // namespace

std::int64_t unit_sum(std::int64_t p, int f, std::int64_t i) {
    require_odd_prime_power(p, f);
    std::int64_t unit = 0;
    const int d = valuation_mod(p, f, i, unit);
    if (d == f) return ipow(p, f) - ipow(p, f - 1);
    if (d == f - 1) return -ipow(p, f - 1);
    return 0;
}

std::int64_t ramanujan(std::int64_t q, std::int64_t i) {
    if (q < 1) throw std::invalid_argument("Ramanujan sum needs q >= 1");
    const std::int64_t t = q / gcd64(q, mod_floor(i, q));
    return moebius(t) * (totient(q) / totient(t));
}

GaussPhase::GaussPhase(Rational factor, int quarter_turns, std::int64_t radicand)
    : factor_(factor), turns_(quarter_turns), radicand_(radicand) {
    if (radicand_ <= 0) throw std::invalid_argument("GaussPhase radicand must be positive");
    normalize();
}

void GaussPhase::normalize() {
    turns_ = static_cast<int>(mod_floor(turns_, 4));
    if (turns_ >= 2) {
        factor_ = -factor_;
        turns_ -= 2;
    }
    std::int64_t k = 1;
    std::int64_t d = 1;
    split_square(radicand_, k, d);
    factor_ *= k;
    radicand_ = d;
    if (factor_.numerator() == 0) {
        turns_ = 0;
        radicand_ = 1;
    }
}

double GaussPhase::real() const {
    if (turns_ != 0) return 0.0;
    return boost::rational_cast<double>(factor_) * std::sqrt(static_cast<double>(radicand_));
}

double GaussPhase::imag() const {
    if (turns_ != 1) return 0.0;
    return boost::rational_cast<double>(factor_) * std::sqrt(static_cast<double>(radicand_));
}

std::string GaussPhase::to_string() const {
    std::string out = std::to_string(factor_.numerator());
    if (factor_.denominator() != 1) out += "/" + std::to_string(factor_.denominator());
    if (turns_ == 1) out += "*i";
    if (radicand_ != 1) out += "*sqrt(" + std::to_string(radicand_) + ")";
    return out;
}

GaussPhase operator*(const GaussPhase& x, const GaussPhase& y) {
    std::int64_t radicand = 0;
    if (__builtin_mul_overflow(x.radicand_, y.radicand_, &radicand)) {
        throw std::overflow_error("GaussPhase radicand overflow");
    }
    return GaussPhase(x.factor_ * y.factor_, x.turns_ + y.turns_, radicand);
}

GaussPhase gauss_sum(std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("gauss_sum expects an odd prime");
    return GaussPhase(Rational(1), p % 4 == 1 ? 0 : 1, p);
}

GaussPhase twisted_sum(std::int64_t p, int f, std::int64_t i) {
    require_odd_prime_power(p, f);
    std::int64_t unit = 0;
    const int d = valuation_mod(p, f, i, unit);
    if (d != f - 1) return GaussPhase::zero();
    return GaussPhase::integer(ipow(p, d) * jacobi(unit, p)) * gauss_sum(p);
}

GaussPhase phase_product(std::span<const GaussPhase> factors) {
    GaussPhase out = GaussPhase::integer(1);
    for (const auto& x : factors) out = out * x;
    return out;
}

std::int64_t phase_to_integer(const GaussPhase& x) {
    if (x.is_zero()) return 0;
    if (x.quarter_turns() != 0) {
        throw InternalError("non-real residue in exact phase " + x.to_string());
    }
    if (x.radicand() != 1) {
        throw InternalError("irrational residue in exact phase " + x.to_string());
    }
    if (x.rational_factor().denominator() != 1) {
        throw InternalError("non-integral exact phase " + x.to_string());
    }
    return x.rational_factor().numerator();
}

}  // namespace altchar
