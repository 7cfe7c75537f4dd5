#pragma once

#include <cstddef>
#include <vector>

#include "dnacode/words.hpp"

namespace dnacode {

/// Output of a prefix balancer: a balanced prefix naming the inversion point
/// and the (nearly) balanced body.
struct PrefixedWord {
  BinaryWord prefix;
  BinaryWord body;

  BinaryWord joined() const { return concat(prefix, body); }
};

/// Index <-> balanced word of fixed even length, using the lexicographically
/// smallest balanced words in order.
class BalancedPrefixMap {
 public:
  BalancedPrefixMap(std::size_t count, std::size_t length);

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  const BinaryWord& word(std::size_t index) const;
  /// Throws ConstraintViolation for a word outside the map.
  std::size_t index_of(const BinaryWord& word) const;

 private:
  std::size_t length_;
  std::vector<BinaryWord> words_;
};

/// ceil(log2 n): bits needed to name one of n inversion points.
unsigned knuth_prefix_bits(std::size_t n);

/// Inverts the first k bits, k the smallest index in 1..n giving exact
/// balance; k is sent as a balanced prefix of 2 ceil(log2 n) bits.
PrefixedWord knuth_encode(const BinaryWord& word);
BinaryWord knuth_decode(const PrefixedWord& codeword);

/// Inversion points b_i = 1 + i s (capped at n), i < 2^p0, s = ceil(n / 2^p0);
/// the one closest to balance wins, ties to the smallest i. The index is sent
/// as a balanced prefix of 2 p0 bits.
PrefixedWord weak_knuth_encode(const BinaryWord& word, unsigned p0);
BinaryWord weak_knuth_decode(const PrefixedWord& codeword, unsigned p0);

/// Guaranteed |w/n - 1/2| of a weak Knuth body: ceil(s/2) / n.
double weak_knuth_unbalance_bound(std::size_t n, unsigned p0);

/// Balancer usable as the first stage of plane construction: payload bits
/// in, prefix + body out.
class Balancer {
 public:
  enum class Kind { knuth, weak_knuth };

  static Balancer knuth(std::size_t payload_bits);
  static Balancer weak_knuth(std::size_t payload_bits, unsigned p0);

  Kind kind() const noexcept { return kind_; }
  std::size_t payload_bits() const noexcept { return payload_bits_; }
  std::size_t prefix_bits() const noexcept { return prefix_bits_; }
  std::size_t output_bits() const noexcept { return payload_bits_ + prefix_bits_; }
  unsigned p0() const noexcept { return p0_; }

  /// Largest relative unbalance of an output word.
  double unbalance_bound() const;

  BinaryWord encode(const BinaryWord& payload) const;
  BinaryWord decode(const BinaryWord& balanced) const;

 private:
  Balancer(Kind kind, std::size_t payload_bits, unsigned p0);

  Kind kind_;
  std::size_t payload_bits_;
  unsigned p0_;
  std::size_t prefix_bits_;
};

}  // namespace dnacode
