#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dnacode {

/// Nucleotide symbol values. AT symbols are the ones with the high bit set.
enum Nucleotide : std::uint8_t { G = 0, C = 1, A = 2, T = 3 };

class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);
  /// Parses a string of '0' and '1'.
  static BinaryWord from_string(std::string_view text);
  /// The low `width` bits of value, most significant first.
  static BinaryWord from_integer(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Number of ones.
  std::size_t weight() const;
  std::uint64_t to_integer() const;
  std::string to_string() const;

  /// Bits [first, first + count).
  BinaryWord slice(std::size_t first, std::size_t count) const;
  /// This word with its first `count` bits inverted.
  BinaryWord flipped_prefix(std::size_t count) const;
  BinaryWord& append(const BinaryWord& tail);

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline BinaryWord concat(BinaryWord head, const BinaryWord& tail) { return head.append(tail); }

/// A strand over {0,1,2,3} with G=0, C=1, A=2, T=3.
class Oligo {
 public:
  Oligo() = default;
  explicit Oligo(std::vector<std::uint8_t> symbols);

  /// Strand with symbol lsb_i + 2 msb_i at every position.
  static Oligo from_planes(const BinaryWord& lsb, const BinaryWord& msb);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }

  /// Number of A or T symbols.
  std::size_t at_weight() const;
  /// |at_weight / n - 1/2|.
  double relative_unbalance() const;
  /// Longest homopolymer run.
  std::size_t max_run() const;

  BinaryWord lsb_plane() const;
  BinaryWord msb_plane() const;

  friend bool operator==(const Oligo&, const Oligo&) = default;
  friend auto operator<=>(const Oligo&, const Oligo&) = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

/// Uppercase ACGT rendering.
std::string oligo_to_text(const Oligo& oligo);

/// Accepts ACGT in either case; throws ParseError naming the first bad
/// character's position.
Oligo text_to_oligo(std::string_view text);

}  // namespace dnacode
