#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dnacode/big_count.hpp"

namespace dnacode {

/// Univariate formal power series with exact integer coefficients, truncated
/// at a fixed degree. Arithmetic between two series truncates at the smaller
/// of the two degrees.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t max_degree);

  /// T(x) = x + x^2 + ... + x^max_run, the generating function of one run.
  static TruncatedSeries run_lengths(unsigned max_run, std::size_t max_degree);

  std::size_t max_degree() const noexcept { return coeffs_.size() - 1; }

  /// [x^degree]; throws DomainError past the truncation degree.
  const BigCount& coefficient(std::size_t degree) const;
  void set_coefficient(std::size_t degree, BigCount value);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const BigCount& scalar);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    return lhs += rhs;
  }
  friend TruncatedSeries operator*(const BigCount& scalar, TruncatedSeries series) {
    return series *= scalar;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  /// 1 / (1 - f) for f with zero constant term.
  TruncatedSeries quasi_inverse() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigCount> coeffs_;
};

/// Sparse bivariate series in (x, y), truncated in x. Terms are keyed by
/// (x-degree, y-degree) and kept in lexicographic order, so all terms of one
/// x-degree are contiguous. Zero coefficients are never stored.
class BiSeries {
 public:
  using Exponent = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponent, BigCount>;

  BiSeries() : BiSeries(0) {}
  explicit BiSeries(unsigned max_x_degree);

  static BiSeries constant(const BigCount& value, unsigned max_x_degree);

  /// T(x) = sum x^i (weight_per_symbol = false) or
  /// T1(x, y) = sum x^i y^i (weight_per_symbol = true), for i = 1..max_run.
  static BiSeries run_lengths(unsigned max_run, unsigned max_x_degree, bool weight_per_symbol);

  unsigned max_x_degree() const noexcept { return max_x_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds value * x^x_degree y^y_degree; terms past the truncation are dropped.
  void add_term(unsigned x_degree, unsigned y_degree, const BigCount& value);

  /// [x^x_degree y^y_degree]; throws DomainError past the truncation degree.
  BigCount coefficient(unsigned x_degree, unsigned y_degree) const;

  /// Coefficients of y^0 .. y^x_degree at the given x-degree.
  std::vector<BigCount> x_slice(unsigned x_degree) const;

  BiSeries& operator+=(const BiSeries& other);
  BiSeries& operator*=(const BigCount& scalar);

  friend BiSeries operator+(BiSeries lhs, const BiSeries& rhs) { return lhs += rhs; }
  friend BiSeries operator*(const BigCount& scalar, BiSeries series) { return series *= scalar; }
  friend BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs);

  /// 1 / (1 - f); requires every term of f to have positive x-degree.
  BiSeries quasi_inverse() const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  Terms::const_iterator slice_begin(unsigned x_degree) const;

  unsigned max_x_;
  Terms terms_;
};

}  // namespace dnacode
