#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace matchbound {

// Exact nonnegative counts (matchings, permanents). Arbitrary precision:
// even desk-scale inputs overflow 64 bits (21! already does).
using BigCount = boost::multiprecision::cpp_int;

// k! as an exact integer.
BigCount factorial_exact(unsigned k);

// Natural log of a positive count via mantissa/exponent split; relative
// error a few ulp. Throws std::domain_error for x <= 0.
double log_of_count(const BigCount& x);

}  // namespace matchbound
