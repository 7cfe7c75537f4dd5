#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace dnacode {

/// Largest codeword length for which tables are built (4^n enumeration).
inline constexpr unsigned kMaxTableLength = 14;

using Symbols = std::vector<std::uint8_t>;

/// Last symbol of the previously emitted codeword; empty at stream start.
struct EncoderState {
  std::optional<std::uint8_t> last_symbol;
};

/// All length-n words over {0..q-1} with runs of at most m, in
/// lexicographic order.
std::vector<Symbols> constrained_words(unsigned q, unsigned m, unsigned n);

/// Table-driven block code whose codeword choice depends on the last symbol
/// of the previous codeword, so concatenated codewords keep the run bound.
///
/// - two_mode: binary; table 0 holds words starting with 0, table 1 words
///   starting with 1. After a codeword ending in b the table of words
///   starting with !b is used. Decoding reads the table from the first bit.
/// - state_independent: quaternary; every index has two representations
///   (tables 0 and 1) whose first symbols differ. The encoder takes the
///   first one not starting with the previous last symbol. Decoding needs
///   only the received word.
/// - state_dependent: quaternary; table a holds words not starting with a,
///   used after a codeword ending in a. Decoding needs the previous symbol.
///
/// At stream start two_mode behaves as if the previous bit was 1 and
/// state_dependent as if the previous symbol was G; state_independent uses
/// the first representation.
class BlockCodebook {
 public:
  enum class Kind { two_mode, state_independent, state_dependent };

  Kind kind() const noexcept { return kind_; }
  unsigned alphabet() const noexcept { return alphabet_; }
  unsigned max_run() const noexcept { return max_run_; }
  unsigned length() const noexcept { return length_; }
  std::size_t mode_count() const noexcept { return tables_.size(); }
  /// Words per table; always a power of two.
  std::size_t size() const noexcept { return tables_.front().size(); }
  /// log2 size(): source bits carried per codeword.
  unsigned source_bits() const noexcept { return source_bits_; }
  /// source_bits() / length().
  double rate() const noexcept { return static_cast<double>(source_bits_) / length_; }

  const Symbols& codeword(std::size_t table, std::size_t index) const;
  /// Index of word within the given table, if present.
  std::optional<std::size_t> index_of(std::size_t table, const Symbols& word) const;

  /// Table the encoder uses in the given state.
  std::size_t encoder_table(const EncoderState& state, std::size_t index) const;

  /// Emits the codeword for index and updates state.
  const Symbols& encode(std::size_t index, EncoderState& state) const;

  /// Recovers the index and updates state; throws ConstraintViolation for
  /// words outside the code or starting with a symbol the state forbids.
  std::size_t decode(const Symbols& word, EncoderState& state) const;

  friend BlockCodebook two_mode_rll_codebook(unsigned m, unsigned n);
  friend BlockCodebook state_independent_codebook(unsigned m, unsigned n);
  friend BlockCodebook state_dependent_codebook(unsigned m, unsigned n);

 private:
  BlockCodebook(Kind kind, unsigned alphabet, unsigned m, unsigned n,
                std::vector<std::vector<Symbols>> tables);

  std::uint32_t pack(const Symbols& word) const;

  Kind kind_;
  unsigned alphabet_;
  unsigned max_run_;
  unsigned length_;
  unsigned source_bits_;
  std::vector<std::vector<Symbols>> tables_;
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> reverse_;
};

/// Binary two-mode code with 2^(floor(log2 N_2(m,n)) - 1) words per mode.
BlockCodebook two_mode_rll_codebook(unsigned m, unsigned n);

/// Quaternary code with two representations per index and
/// 2^(floor(log2 N_4(m,n)) - 1) indices.
BlockCodebook state_independent_codebook(unsigned m, unsigned n);

/// Quaternary four-table code; each table is cut from K = 3/4 N_4(m,n)
/// words down to a power of two by dropping the most unbalanced words.
BlockCodebook state_dependent_codebook(unsigned m, unsigned n);

/// Largest power-of-two exponent e with 2^e <= value (value >= 1).
unsigned floor_log2(std::uint64_t value);

}  // namespace dnacode
