#include "dnacode/big_count.hpp"

#include <cmath>
#include <limits>

namespace dnacode {

BigCount power(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigCount(base), exponent);
}

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double log2_count(const BigCount& value) {
  if (value.is_zero()) return -std::numeric_limits<double>::infinity();
  const auto top = boost::multiprecision::msb(value);
  if (top < 62) return std::log2(value.convert_to<double>());
  // Keep 62 significant bits, account for the rest as a power of two.
  const auto shift = top - 61;
  const BigCount head = value >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

double to_double(const BigCount& value) {
  if (value.is_zero()) return 0.0;
  const double bits = log2_count(value);
  if (bits >= 1024.0) return std::numeric_limits<double>::infinity();
  return value.convert_to<double>();
}

std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace dnacode
