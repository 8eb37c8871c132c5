#include "altchar/bigint.hpp"

#include <limits>
#include <stdexcept>

#include "altchar/errors.hpp"

namespace altchar {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt result = 1;
    for (int k = 2; k <= n; ++k) result *= k;
    return result;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0) throw InternalError(std::string(context) + ": division by zero");
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw InternalError(std::string(context) + ": " + num.str() + " is not divisible by " +
                            den.str());
    }
    return q;
}

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
    }
    return x.convert_to<std::int64_t>();
}

}  // namespace altchar
