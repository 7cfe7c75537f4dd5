#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnacode/big_count.hpp"
#include "dnacode/constructions.hpp"
#include "dnacode/types.hpp"

// Exhaustive ground truth. Nothing here calls into the counting module; the
// codec validator drives the encoders but checks their output with its own
// run and weight scanners.

namespace dnacode::oracle {

/// Enumeration refuses search spaces larger than this many words.
inline constexpr std::uint64_t kMaxCandidates = 100'000'000;

struct BruteForceReport {
  std::string subject;
  std::string parameters;
  /// Words counted, or cases checked for a codec validation.
  BigCount count;
  std::chrono::nanoseconds elapsed{0};
  bool passed = true;
  /// First failure: source word, strand and the violated property.
  std::string counterexample;
};

BigCount brute_rll_count(unsigned q, unsigned m, unsigned n);
BigCount brute_weight_count(unsigned q, unsigned m, unsigned w, unsigned n);
/// Counts for every weight 0..n in one pass.
std::vector<BigCount> brute_weight_profile(unsigned q, unsigned m, unsigned n);
BigCount brute_balance_count(unsigned n, double a, BoundaryMode mode);

/// Timed wrappers that fill a report.
BruteForceReport report_rll_count(unsigned q, unsigned m, unsigned n);
BruteForceReport report_balance_count(unsigned n, double a, BoundaryMode mode);

enum class Target {
  knuth,
  weak_knuth,
  two_mode,
  construction1_knuth,
  construction1_weak_knuth,
  construction2,
  state_independent,
  state_dependent,
};

std::optional<Target> parse_target(const std::string& name);
std::string target_name(Target target);

/// Knuth and weak Knuth use params.n as the word length; Construction I uses
/// params.payload_bits.
BruteForceReport validate_codec(Target target, const CodecParams& params);

}  // namespace dnacode::oracle
