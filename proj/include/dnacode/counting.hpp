#pragma once

#include <vector>

#include "dnacode/big_count.hpp"
#include "dnacode/types.hpp"

namespace dnacode {

/// Number of sequences of one length, split by weight. For quaternary
/// strands the weight is the AT-content, for binary words the number of ones.
struct WeightProfile {
  unsigned length = 0;
  std::vector<BigCount> counts;  // indexed by weight 0..length

  BigCount total() const;
};

/// N(w, n) = C(n, w) 2^n: quaternary strands of length n with AT-weight w.
BigCount binomial_weight_count(unsigned n, unsigned w);

/// True when weight w of an n-symbol word lies within relative unbalance a.
bool weight_admitted(unsigned w, unsigned n, double a, BoundaryMode mode);

/// N_a(n): quaternary strands whose relative unbalance is within a.
BigCount near_balanced_count(unsigned n, double a, BoundaryMode mode = BoundaryMode::strict);

/// r(a, n) = 2n - log2 N_a(n), in bits.
double balance_redundancy(unsigned n, double a, BoundaryMode mode = BoundaryMode::strict);

/// N_q(m, n) by the run recurrence. N_q(m, 0) = 1 (the empty word).
BigCount rll_count(unsigned q, unsigned m, unsigned n);

/// N_q(m, n) as [x^n] qT(x) / (1 - (q-1)T(x)).
BigCount rll_count_gf(unsigned q, unsigned m, unsigned n);

/// N_2(m, w, n): n-bit words with runs of at most m and w ones, extracted
/// from (T1 + T + 2 T1 T) / (1 - T1 T).
BigCount rll_weight_count_binary(unsigned m, unsigned w, unsigned n);

/// N_4(m, w, n): quaternary strands with homopolymer runs of at most m and
/// AT-weight w, from the entry sum of the transfer-matrix powers.
BigCount rll_weight_count_quaternary(unsigned m, unsigned w, unsigned n);

/// All weights at once. m = kNoRunLimit removes the run constraint.
WeightProfile weight_profile(Alphabet kind, unsigned m, unsigned n);

}  // namespace dnacode
