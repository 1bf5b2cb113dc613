#include "peakmod/numeric.hpp"

#include <string>

#include "peakmod/error.hpp"

namespace peakmod {

BigCount binomial(long n, long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigCount result = 1;
    for (long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

BigCount require_integer(const Rational& value, const char* context) {
    if (boost::multiprecision::denominator(value) != 1) {
        throw Error(ErrorCode::NonIntegerResult, std::string(context) + " evaluated to " + value.str());
    }
    return boost::multiprecision::numerator(value);
}

}  // namespace peakmod
