#include <doctest.h>

#include "dnacode/errors.hpp"
#include "dnacode/oracle.hpp"

using namespace dnacode;
using namespace dnacode::oracle;

TEST_SUITE("oracle") {

TEST_CASE("small exhaustive counts") {
  CHECK(brute_weight_count(2, 1, 2, 4) == 2);
  CHECK(brute_weight_count(4, 1, 0, 2) == 2);
  CHECK(brute_rll_count(4, 3, 5) == 996);
  CHECK(brute_rll_count(2, 3, 5) == 26);
  BigCount sum = 0;
  for (const auto& c : brute_weight_profile(4, 3, 5)) sum += c;
  CHECK(sum == 996);
  CHECK(brute_balance_count(4, 0.2, BoundaryMode::strict) == 96);
  CHECK(brute_balance_count(2, 0.6, BoundaryMode::strict) == 16);
  CHECK(brute_balance_count(1, 0.1, BoundaryMode::strict) == 0);
}

TEST_CASE("search space cap") {
  CHECK_THROWS_AS(brute_rll_count(4, 3, 14), SearchSpaceTooLarge);
  CHECK_THROWS_AS(brute_balance_count(4, -0.1, BoundaryMode::strict), DomainError);
}

TEST_CASE("reports carry timing and parameters") {
  const auto r = report_rll_count(4, 2, 10);
  CHECK(r.count == 676836);
  CHECK(r.parameters == "q=4 m=2 n=10");
  CHECK(r.passed);
}

TEST_CASE("codec validation passes on the reference grids") {
  struct Case {
    Target target;
    CodecParams params;
  };
  const Case cases[] = {
      {Target::two_mode, {.m = 2, .n = 6}},
      {Target::state_dependent, {.m = 3, .n = 5}},
      {Target::weak_knuth, {.n = 10, .p0 = 2}},
      {Target::knuth, {.n = 10}},
      {Target::construction1_knuth, {.payload_bits = 4}},
      {Target::construction1_weak_knuth, {.payload_bits = 6, .p0 = 2}},
      {Target::construction2, {.m = 3, .n = 5}},
      {Target::state_independent, {.m = 2, .n = 5}},
  };
  for (const auto& c : cases) {
    const auto r = validate_codec(c.target, c.params);
    CAPTURE(r.subject);
    CAPTURE(r.counterexample);
    CHECK(r.passed);
    CHECK(r.count > 0);
  }
}

TEST_CASE("state-dependent validation covers every source in every state") {
  const auto r = validate_codec(Target::state_dependent, {.m = 3, .n = 5});
  // 512 sources under the stream-start state and four previous symbols,
  // plus the random streams.
  CHECK(r.count >= 512 * 5);
}

TEST_CASE("target names round trip") {
  for (auto t : {Target::knuth, Target::weak_knuth, Target::two_mode, Target::construction1_knuth,
                 Target::construction1_weak_knuth, Target::construction2, Target::state_independent,
                 Target::state_dependent}) {
    CHECK(parse_target(target_name(t)) == t);
  }
  CHECK_FALSE(parse_target("nope"));
}

}
