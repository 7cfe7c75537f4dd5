#include <doctest.h>

#include <cmath>

#include "dnacode/counting.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/oracle.hpp"

using namespace dnacode;

TEST_SUITE("counting") {

TEST_CASE("recurrence values") {
  CHECK(rll_count(4, 3, 5) == 996);
  CHECK(rll_count(4, 2, 10) == 676836);
  CHECK(rll_count(4, 1, 6) == 972);
  CHECK(rll_count(2, 3, 5) == 26);
  CHECK(rll_count(2, 1, 9) == 2);
  CHECK(rll_count(3, 2, 0) == 1);
  CHECK(rll_count_gf(3, 2, 0) == 1);
  for (unsigned n = 1; n <= 4; ++n) CHECK(rll_count(4, 4, n) == power(4, n));
  CHECK_THROWS_AS(rll_count(1, 2, 3), DomainError);
  CHECK_THROWS_AS(rll_count(4, 0, 3), DomainError);
}

TEST_CASE("log2 of exact counts across the double mantissa boundary") {
  for (unsigned k = 0; k <= 300; ++k) {
    CHECK(log2_count(power(2, k)) == static_cast<double>(k));
    CHECK(log2_count(3 * power(2, k)) == doctest::Approx(k + std::log2(3.0)).epsilon(1e-15));
  }
  CHECK(std::isinf(log2_count(0)));
}

TEST_CASE("recurrence and generating function agree on a wide grid") {
  for (unsigned q = 2; q <= 5; ++q) {
    for (unsigned m = 1; m <= 6; ++m) {
      for (unsigned n = 0; n <= 40; ++n) CHECK(rll_count(q, m, n) == rll_count_gf(q, m, n));
    }
  }
}

TEST_CASE("formula counts equal exhaustive counts") {
  for (unsigned q : {2u, 4u}) {
    for (unsigned m = 1; m <= 5; ++m) {
      for (unsigned n = 1; n <= 9; ++n) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        const auto brute = oracle::brute_weight_profile(q, m, n);
        const auto profile = weight_profile(q == 2 ? Alphabet::binary : Alphabet::quaternary, m, n);
        REQUIRE(profile.counts.size() == n + 1);
        for (unsigned w = 0; w <= n; ++w) CHECK(profile.counts[w] == brute[w]);
        CHECK(rll_count(q, m, n) == oracle::brute_rll_count(q, m, n));
      }
    }
  }
}

TEST_CASE("weight sums recover the run-limited totals") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 11; ++n) {
      BigCount binary = 0, quaternary = 0;
      for (unsigned w = 0; w <= n; ++w) {
        binary += rll_weight_count_binary(m, w, n);
        quaternary += rll_weight_count_quaternary(m, w, n);
      }
      CHECK(binary == rll_count(2, m, n));
      CHECK(quaternary == rll_count(4, m, n));
    }
  }
}

TEST_CASE("weight profiles are symmetric") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 12; ++n) {
      const auto b = weight_profile(Alphabet::binary, m, n);
      const auto q = weight_profile(Alphabet::quaternary, m, n);
      for (unsigned w = 0; w <= n; ++w) {
        CHECK(b.counts[w] == b.counts[n - w]);
        CHECK(q.counts[w] == q.counts[n - w]);
      }
    }
  }
}

TEST_CASE("small weight counts") {
  CHECK(rll_weight_count_binary(3, 2, 5) == 10);
  CHECK(weight_profile(Alphabet::binary, 3, 5).counts == std::vector<BigCount>{0, 3, 10, 10, 3, 0});
  CHECK(rll_weight_count_binary(1, 2, 4) == 2);
  CHECK(rll_weight_count_quaternary(1, 0, 2) == 2);
  CHECK(weight_profile(Alphabet::quaternary, 3, 5).total() == 996);
  CHECK_THROWS_AS(rll_weight_count_binary(2, 6, 5), DomainError);
}

TEST_CASE("no run limit gives binomial profiles") {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto q = weight_profile(Alphabet::quaternary, kNoRunLimit, n);
    const auto b = weight_profile(Alphabet::binary, kNoRunLimit, n);
    for (unsigned w = 0; w <= n; ++w) {
      CHECK(q.counts[w] == binomial_weight_count(n, w));
      CHECK(b.counts[w] == binomial(n, w));
    }
  }
}

TEST_CASE("nearly balanced counts") {
  CHECK(near_balanced_count(2, 0.6) == 16);
  CHECK(near_balanced_count(4, 0.2) == 96);
  CHECK(near_balanced_count(1, 0.1) == 0);
  CHECK(balance_redundancy(2, 0.6) == doctest::Approx(0.0));
  CHECK(balance_redundancy(4, 0.2) == doctest::Approx(8.0 - std::log2(96.0)));
  CHECK_THROWS_AS(balance_redundancy(1, 0.1), UndefinedRedundancy);
  CHECK_THROWS_AS(near_balanced_count(4, -0.1), DomainError);
}

TEST_CASE("boundary weights follow the chosen mode") {
  // n = 10, a = 0.3: w = 2 and w = 8 sit exactly on the boundary.
  const BigCount inner = near_balanced_count(10, 0.3, BoundaryMode::strict);
  const BigCount with_edges = near_balanced_count(10, 0.3, BoundaryMode::inclusive);
  CHECK(with_edges - inner == 2 * binomial_weight_count(10, 2));
  for (unsigned n = 1; n <= 8; ++n) {
    for (double a : {0.05, 0.1, 0.125, 0.25, 0.3, 0.375, 0.5}) {
      for (auto mode : {BoundaryMode::strict, BoundaryMode::inclusive}) {
        CHECK(near_balanced_count(n, a, mode) == oracle::brute_balance_count(n, a, mode));
      }
    }
  }
}

TEST_CASE("nearly balanced counts grow with a and reach 4^n past one half") {
  for (unsigned n = 1; n <= 30; ++n) {
    BigCount previous = 0;
    for (int i = 0; i <= 60; ++i) {
      const BigCount c = near_balanced_count(n, i / 100.0);
      CHECK(c >= previous);
      previous = c;
    }
    CHECK(near_balanced_count(n, 0.5 + 1e-6) == power(4, n));
  }
}

}
