#include "dnacode/counting.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "dnacode/errors.hpp"
#include "dnacode/series.hpp"
#include "dnacode/transfer_matrix.hpp"

namespace dnacode {

namespace {

void require_run_and_alphabet(unsigned q, unsigned m) {
  if (q < 2) throw DomainError("alphabet size must be at least 2, got " + std::to_string(q));
  if (m < 1) throw DomainError("maximum run must be at least 1");
}

void require_weight(unsigned w, unsigned n) {
  if (n < 1) throw DomainError("length must be at least 1");
  if (w > n) {
    throw DomainError("weight " + std::to_string(w) + " exceeds length " + std::to_string(n));
  }
}

// A run limit beyond the word length does not constrain anything.
unsigned effective_run(unsigned m, unsigned n) { return std::min(m, std::max(n, 1u)); }

std::vector<BigCount> binary_profile(unsigned m, unsigned n) {
  const unsigned run = effective_run(m, n);
  const BiSeries t = BiSeries::run_lengths(run, n, false);
  const BiSeries t1 = BiSeries::run_lengths(run, n, true);
  const BiSeries t1t = t1 * t;
  const BiSeries numerator = t1 + t + BigCount(2) * t1t;
  const BiSeries gf = numerator * t1t.quasi_inverse();
  auto slice = gf.x_slice(n);
  slice.resize(n + 1);
  return slice;
}

std::vector<BigCount> quaternary_profile(unsigned m, unsigned n) {
  const BiSeries paths = TransferMatrix::skeleton(effective_run(m, n), n).geometric_entry_sum();
  auto slice = paths.x_slice(n);
  slice.resize(n + 1);
  for (auto& c : slice) {
    // Every path may end in any of three successor states.
    const BigCount q = c / 3;
    assert(q * 3 == c && "transfer-matrix entry sum not divisible by 3");
    if (q * 3 != c) throw NumericError("transfer-matrix entry sum not divisible by 3");
    c = q;
  }
  return slice;
}

}  // namespace

BigCount WeightProfile::total() const {
  BigCount sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

BigCount binomial_weight_count(unsigned n, unsigned w) {
  require_weight(w, n);
  return binomial(n, w) * power(2, n);
}

bool weight_admitted(unsigned w, unsigned n, double a, BoundaryMode mode) {
  // |w/n - 1/2| compared as |2w - n| against 2an to keep the left side exact.
  // The offset is an integer, so a limit within kSnap of one is taken as
  // equal to it: a = 0.3 at n = 10 sits on w = 8, not beside it.
  constexpr double kSnap = 1e-9;
  const double offset = std::abs(2.0 * w - static_cast<double>(n));
  const double limit = 2.0 * a * n;
  return mode == BoundaryMode::strict ? offset < limit - kSnap : offset <= limit + kSnap;
}

BigCount near_balanced_count(unsigned n, double a, BoundaryMode mode) {
  if (n < 1) throw DomainError("length must be at least 1");
  if (!(a >= 0.0)) throw DomainError("unbalance bound must be non-negative");
  BigCount sum = 0;
  for (unsigned w = 0; w <= n; ++w) {
    if (weight_admitted(w, n, a, mode)) sum += binomial(n, w);
  }
  return sum * power(2, n);
}

double balance_redundancy(unsigned n, double a, BoundaryMode mode) {
  const BigCount count = near_balanced_count(n, a, mode);
  if (count.is_zero()) {
    throw UndefinedRedundancy("no strand of length " + std::to_string(n) +
                              " meets the unbalance bound");
  }
  return 2.0 * n - log2_count(count);
}

BigCount rll_count(unsigned q, unsigned m, unsigned n) {
  require_run_and_alphabet(q, m);
  if (n == 0) return 1;
  // h_0 = 0 is the generating-function coefficient, not the empty word.
  std::vector<BigCount> h(n + 1);
  BigCount window = 0;  // h[k-1] + ... + h[k-m]
  for (unsigned k = 1; k <= n; ++k) {
    h[k] = k <= m ? power(q, k) : BigCount((q - 1) * window);
    window += h[k];
    if (k >= m) window -= h[k - m];
  }
  return h[n];
}

BigCount rll_count_gf(unsigned q, unsigned m, unsigned n) {
  require_run_and_alphabet(q, m);
  if (n == 0) return 1;
  const TruncatedSeries t = TruncatedSeries::run_lengths(effective_run(m, n), n);
  const TruncatedSeries gf = (BigCount(q) * t) * (BigCount(q - 1) * t).quasi_inverse();
  return gf.coefficient(n);
}

BigCount rll_weight_count_binary(unsigned m, unsigned w, unsigned n) {
  require_run_and_alphabet(2, m);
  require_weight(w, n);
  return binary_profile(m, n)[w];
}

BigCount rll_weight_count_quaternary(unsigned m, unsigned w, unsigned n) {
  require_run_and_alphabet(4, m);
  require_weight(w, n);
  return quaternary_profile(m, n)[w];
}

WeightProfile weight_profile(Alphabet kind, unsigned m, unsigned n) {
  require_run_and_alphabet(2, m);
  if (n < 1) throw DomainError("length must be at least 1");
  WeightProfile p;
  p.length = n;
  p.counts = kind == Alphabet::binary ? binary_profile(m, n) : quaternary_profile(m, n);
  return p;
}

}  // namespace dnacode
