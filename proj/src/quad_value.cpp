#include "altchar/quad_value.hpp"

#include <cmath>
#include <stdexcept>

#include "altchar/cycle_type.hpp"
#include "altchar/errors.hpp"

namespace altchar {

void split_square(std::int64_t x, std::int64_t& k, std::int64_t& d) {
    if (x == 0) {
        k = 0;
        d = 0;
        return;
    }
    k = 1;
    d = x < 0 ? -1 : 1;
    for (auto [p, e] : factorize(x < 0 ? -x : x)) {
        for (int t = 0; t < e / 2; ++t) k *= p;
        if (e % 2 == 1) d *= p;
    }
}

QuadValue::QuadValue(BigInt a, BigInt b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    std::int64_t k = 0;
    std::int64_t core = 0;
    split_square(d_, k, core);
    if (core == 0) throw std::invalid_argument("QuadValue with b != 0 needs D != 0");
    b_ *= k;
    d_ = core;
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

std::complex<double> QuadValue::to_complex() const {
    const double a = a_.convert_to<double>();
    const double b = b_.convert_to<double>();
    if (d_ >= 0) return {(a + b * std::sqrt(static_cast<double>(d_))) / 2.0, 0.0};
    return {a / 2.0, b * std::sqrt(static_cast<double>(-d_)) / 2.0};
}

std::string QuadValue::to_string() const {
    if (b_ == 0) {
        if (a_ % 2 == 0) return BigInt(a_ / 2).str();
        return a_.str() + "/2";
    }
    std::string out = "(" + a_.str();
    out += b_ < 0 ? " - " : " + ";
    const BigInt mag = b_ < 0 ? BigInt(-b_) : b_;
    if (mag != 1) out += mag.str() + "*";
    out += "sqrt(" + std::to_string(d_) + "))/2";
    return out;
}

QuadValue& QuadValue::operator+=(const QuadValue& other) {
    if (b_ != 0 && other.b_ != 0 && d_ != other.d_) {
        throw std::domain_error("adding QuadValues with different discriminants");
    }
    const std::int64_t d = b_ != 0 ? d_ : other.d_;
    *this = QuadValue(a_ + other.a_, b_ + other.b_, d);
    return *this;
}

QuadValue& QuadValue::operator*=(const BigInt& k) {
    *this = QuadValue(a_ * k, b_ * k, d_);
    return *this;
}

QuadValue operator*(const QuadValue& x, const QuadValue& y) {
    if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_) {
        throw std::domain_error("multiplying QuadValues with different discriminants");
    }
    const std::int64_t d = x.b_ != 0 ? x.d_ : y.d_;
    // ((a1 + b1√D)(a2 + b2√D))/4 rewritten over the denominator 2.
    const BigInt a2 = x.a_ * y.a_ + x.b_ * y.b_ * d;
    const BigInt b2 = x.a_ * y.b_ + x.b_ * y.a_;
    if (a2 % 2 != 0 || b2 % 2 != 0) {
        throw InternalError("QuadValue product " + x.to_string() + " * " + y.to_string() +
                            " leaves the half-integer lattice");
    }
    return QuadValue(a2 / 2, b2 / 2, d);
}

}  // namespace altchar
