#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace altchar {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// Exact division; throws InternalError if `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Narrowing with an overflow check.
std::int64_t to_int64(const BigInt& x);

}  // namespace altchar
