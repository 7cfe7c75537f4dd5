#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "dnacode/balancing.hpp"
#include "dnacode/block_codes.hpp"
#include "dnacode/words.hpp"

namespace dnacode {

/// v_i = lsb_i + 2 msb_i. The AT-weight of v equals the weight of msb.
inline Oligo combine_planes(const BinaryWord& lsb, const BinaryWord& msb) {
  return Oligo::from_planes(lsb, msb);
}

/// Balanced strands from a binary balancer: the first l source bits are
/// balanced into u (the msb plane), the remaining n bits ride in the lsb
/// plane unchanged. Rate 1 + l/n.
class Construction1 {
 public:
  explicit Construction1(Balancer balancer);

  const Balancer& balancer() const noexcept { return balancer_; }
  std::size_t source_bits() const noexcept { return balancer_.payload_bits() + strand_length(); }
  std::size_t strand_length() const noexcept { return balancer_.output_bits(); }
  double rate() const noexcept { return static_cast<double>(source_bits()) / strand_length(); }

  Oligo encode(const BinaryWord& source) const;
  BinaryWord decode(const Oligo& strand) const;

 private:
  Balancer balancer_;
};

/// Run-limited strands from a binary two-mode RLL code: u carries the
/// runlength constraint in the lsb plane, n raw source bits fill the msb
/// plane. A strand's runs are exactly the runs of u.
class Construction2 {
 public:
  Construction2(unsigned m, unsigned n);

  const BlockCodebook& inner() const noexcept { return inner_; }
  std::size_t source_bits() const noexcept { return inner_.source_bits() + inner_.length(); }
  std::size_t strand_length() const noexcept { return inner_.length(); }
  /// (n - 1 + floor(log2 N_2(m,n))) / n.
  double rate() const noexcept { return static_cast<double>(source_bits()) / strand_length(); }
  double inner_rate() const noexcept { return inner_.rate(); }

  /// state tracks the last bit of the previous u.
  Oligo encode(const BinaryWord& source, EncoderState& state) const;
  BinaryWord decode(const Oligo& strand, EncoderState& state) const;

 private:
  BlockCodebook inner_;
};

/// Identifies a strand code for streaming and validation.
enum class CodecId {
  construction1_knuth,
  construction1_weak_knuth,
  construction2,
  state_independent,
  state_dependent,
};

struct CodecParams {
  unsigned m = 3;
  unsigned n = 5;
  /// Balancer payload length l for Construction I.
  std::size_t payload_bits = 8;
  /// Weak Knuth prefix parameter.
  unsigned p0 = 2;
};

/// Parses names such as "state-dependent"; nullopt when unknown.
std::optional<CodecId> parse_codec_id(const std::string& name);
std::string codec_name(CodecId id);

/// Fixed-size block code from source bits to strands, one block at a time.
class StrandCodec {
 public:
  virtual ~StrandCodec() = default;

  virtual std::size_t source_bits() const = 0;
  virtual std::size_t strand_length() const = 0;
  /// Homopolymer bound kept across concatenated strands, if the code has one.
  virtual std::optional<unsigned> max_run() const { return std::nullopt; }
  /// Relative unbalance bound of every strand, if the code has one.
  virtual std::optional<double> unbalance_bound() const { return std::nullopt; }

  virtual Oligo encode(const BinaryWord& source, EncoderState& state) const = 0;
  virtual BinaryWord decode(const Oligo& strand, EncoderState& state) const = 0;

  double rate() const { return static_cast<double>(source_bits()) / strand_length(); }
};

std::unique_ptr<StrandCodec> make_codec(CodecId id, const CodecParams& params);

}  // namespace dnacode
