#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace peakmod {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, r); zero when r < 0 or r > n.
BigCount binomial(long n, long r);

/// Exact quotient; throws Error(NonIntegerResult) when the value is not an integer.
BigCount require_integer(const Rational& value, const char* context);

}  // namespace peakmod
