#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "altchar/bigint.hpp"

namespace altchar {

/// An exact number (a + b√D) / 2 with integer a, b and square-free D.
///
/// For D < 0 the root is the principal one, i√|D|. When b = 0 the
/// discriminant is normalised to 0. Sums and products are closed for a
/// common D; mixing two non-zero discriminants throws std::domain_error.
class QuadValue {
public:
    QuadValue() = default;
    QuadValue(BigInt a, BigInt b, std::int64_t d);

    static QuadValue integer(const BigInt& k) { return QuadValue(2 * k, 0, 0); }
    /// k / 2.
    static QuadValue half(const BigInt& k) { return QuadValue(k, 0, 0); }

    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    std::int64_t discriminant() const noexcept { return d_; }

    bool is_rational() const noexcept { return b_ == 0; }
    bool is_integer() const noexcept { return b_ == 0 && (a_ % 2) == 0; }

    /// b → -b; the complex conjugate when D < 0, the Galois conjugate otherwise.
    QuadValue galois_conjugate() const { return QuadValue(a_, -b_, d_); }

    std::complex<double> to_complex() const;
    std::string to_string() const;

    QuadValue& operator+=(const QuadValue& other);
    QuadValue& operator*=(const BigInt& k);

    friend QuadValue operator+(QuadValue x, const QuadValue& y) { return x += y; }
    friend QuadValue operator*(QuadValue x, const BigInt& k) { return x *= k; }
    friend QuadValue operator*(const QuadValue& x, const QuadValue& y);
    friend bool operator==(const QuadValue&, const QuadValue&) = default;

private:
    BigInt a_ = 0;
    BigInt b_ = 0;
    std::int64_t d_ = 0;
};

/// Writes x = k² · d with d square-free (sign of x kept on d).
void split_square(std::int64_t x, std::int64_t& k, std::int64_t& d);

}  // namespace altchar
