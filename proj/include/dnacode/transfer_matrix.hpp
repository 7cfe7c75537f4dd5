#pragma once

#include <array>
#include <cstddef>

#include "dnacode/series.hpp"

namespace dnacode {

/// 4x4 matrix over BiSeries describing the run-emitting source of quaternary
/// strands. Row i emits one run of symbol i (x marks length, y marks AT
/// symbols) and moves to a different state j. Symbols follow the nucleotide
/// map G=0, C=1, A=2, T=3, so rows 2 and 3 carry the AT weight.
class TransferMatrix {
 public:
  static constexpr std::size_t kStates = 4;

  /// Zero matrix truncated at the given x-degree.
  explicit TransferMatrix(unsigned max_x_degree);

  static TransferMatrix identity(unsigned max_x_degree);

  /// D(x, y): off-diagonal entries T(x) in the GC rows and T1(x, y) in the
  /// AT rows, zero diagonal.
  static TransferMatrix skeleton(unsigned max_run, unsigned max_x_degree);

  unsigned max_x_degree() const noexcept { return max_x_; }

  const BiSeries& operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  BiSeries& operator()(std::size_t row, std::size_t col) { return entries_[row][col]; }

  TransferMatrix& operator+=(const TransferMatrix& other);
  friend TransferMatrix operator+(TransferMatrix lhs, const TransferMatrix& rhs) { return lhs += rhs; }
  friend TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs);

  /// D^k by binary powering.
  TransferMatrix power(unsigned exponent) const;

  /// D + D^2 + ... + D^k by doubling: S_2j = S_j + D^j S_j, S_j+1 = D + D S_j.
  TransferMatrix power_sum(unsigned exponent) const;

  /// Sum of all sixteen entries.
  BiSeries entry_sum() const;

  /// Entry sum of D + D^2 + ... up to the truncation degree, accumulated one
  /// x-degree at a time. Equivalent to power_sum(max_x_degree()).entry_sum()
  /// when every entry has positive x-degree, at a fraction of the cost.
  BiSeries geometric_entry_sum() const;

 private:
  unsigned max_x_;
  std::array<std::array<BiSeries, kStates>, kStates> entries_;
};

}  // namespace dnacode
