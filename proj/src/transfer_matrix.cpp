#include "dnacode/transfer_matrix.hpp"

#include <utility>
#include <vector>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

bool is_at_symbol(std::size_t state) { return state >= 2; }

}  // namespace

TransferMatrix::TransferMatrix(unsigned max_x_degree)
    : max_x_(max_x_degree) {
  for (auto& row : entries_) row.fill(BiSeries(max_x_degree));
}

TransferMatrix TransferMatrix::identity(unsigned max_x_degree) {
  TransferMatrix id(max_x_degree);
  for (std::size_t i = 0; i < kStates; ++i) id(i, i).add_term(0, 0, 1);
  return id;
}

TransferMatrix TransferMatrix::skeleton(unsigned max_run, unsigned max_x_degree) {
  if (max_run < 1) throw DomainError("maximum run must be at least 1");
  TransferMatrix d(max_x_degree);
  const BiSeries gc_run = BiSeries::run_lengths(max_run, max_x_degree, false);
  const BiSeries at_run = BiSeries::run_lengths(max_run, max_x_degree, true);
  for (std::size_t i = 0; i < kStates; ++i) {
    for (std::size_t j = 0; j < kStates; ++j) {
      if (i != j) d(i, j) = is_at_symbol(i) ? at_run : gc_run;
    }
  }
  return d;
}

TransferMatrix& TransferMatrix::operator+=(const TransferMatrix& other) {
  max_x_ = std::min(max_x_, other.max_x_);
  for (std::size_t i = 0; i < kStates; ++i) {
    for (std::size_t j = 0; j < kStates; ++j) entries_[i][j] += other.entries_[i][j];
  }
  return *this;
}

TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) {
  TransferMatrix out(std::min(lhs.max_x_, rhs.max_x_));
  for (std::size_t i = 0; i < TransferMatrix::kStates; ++i) {
    for (std::size_t k = 0; k < TransferMatrix::kStates; ++k) {
      if (lhs(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < TransferMatrix::kStates; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += lhs(i, k) * rhs(k, j);
      }
    }
  }
  return out;
}

TransferMatrix TransferMatrix::power(unsigned exponent) const {
  TransferMatrix result = identity(max_x_);
  TransferMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TransferMatrix TransferMatrix::power_sum(unsigned exponent) const {
  TransferMatrix sum(max_x_);
  if (exponent == 0) return sum;
  // Walk the bits of the exponent from the top, tracking S_j and D^j.
  unsigned top = 31;
  while (((exponent >> top) & 1u) == 0) --top;
  sum = *this;
  TransferMatrix pw = *this;
  for (int bit = static_cast<int>(top) - 1; bit >= 0; --bit) {
    sum = sum + pw * sum;
    pw = pw * pw;
    if ((exponent >> bit) & 1u) {
      sum = *this + *this * sum;
      pw = pw * *this;
    }
  }
  return sum;
}

BiSeries TransferMatrix::entry_sum() const {
  BiSeries total(max_x_);
  for (const auto& row : entries_) {
    for (const auto& e : row) total += e;
  }
  return total;
}

BiSeries TransferMatrix::geometric_entry_sum() const {
  // s_d[j] = [x^d] (1^T (I + D + D^2 + ...))_j, with s_0 = 1^T. Then the
  // wanted total is sum_j s_d[j] for d >= 1.
  std::vector<std::array<std::vector<BigCount>, kStates>> s(max_x_ + 1);
  for (std::size_t j = 0; j < kStates; ++j) s[0][j] = {BigCount(1)};
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_zero() && e.terms().begin()->first.first == 0) {
        throw DomainError("geometric sum needs entries of positive x-degree");
      }
    }
  }
  BiSeries total(max_x_);
  for (unsigned d = 1; d <= max_x_; ++d) {
    for (std::size_t j = 0; j < kStates; ++j) {
      std::vector<BigCount> acc;
      for (std::size_t i = 0; i < kStates; ++i) {
        for (const auto& [e, c] : entries_[i][j].terms()) {
          if (e.first > d) break;
          const auto& from = s[d - e.first][i];
          if (acc.size() < from.size() + e.second) acc.resize(from.size() + e.second);
          for (std::size_t w = 0; w < from.size(); ++w) {
            if (!from[w].is_zero()) acc[w + e.second] += c * from[w];
          }
        }
      }
      for (std::size_t w = 0; w < acc.size(); ++w) total.add_term(d, static_cast<unsigned>(w), acc[w]);
      s[d][j] = std::move(acc);
    }
  }
  return total;
}

}  // namespace dnacode
