#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dnacode {

/// Exact non-negative sequence count. Every enumeration in the library is
/// carried out in this type; conversion to floating point happens only at
/// the asymptotics boundary through log2_count().
using BigCount = boost::multiprecision::cpp_int;

/// base^exponent, exactly.
BigCount power(unsigned base, unsigned exponent);

/// Binomial coefficient C(n, k); zero when k > n.
BigCount binomial(unsigned n, unsigned k);

/// log2 of a positive count without overflowing double, accurate to about
/// one ulp of the mantissa. Returns -infinity for zero.
double log2_count(const BigCount& value);

/// value as a double; +infinity past the double range.
double to_double(const BigCount& value);

std::string to_decimal(const BigCount& value);

}  // namespace dnacode
