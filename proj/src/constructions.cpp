#include "dnacode/constructions.hpp"

#include <map>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

BinaryWord symbols_to_bits(const Symbols& s) { return BinaryWord(Symbols(s)); }

class Construction1Codec final : public StrandCodec {
 public:
  explicit Construction1Codec(Balancer b) : code_(std::move(b)) {}
  std::size_t source_bits() const override { return code_.source_bits(); }
  std::size_t strand_length() const override { return code_.strand_length(); }
  std::optional<double> unbalance_bound() const override { return code_.balancer().unbalance_bound(); }
  Oligo encode(const BinaryWord& source, EncoderState& state) const override {
    Oligo o = code_.encode(source);
    state.last_symbol = o[o.size() - 1];
    return o;
  }
  BinaryWord decode(const Oligo& strand, EncoderState& state) const override {
    BinaryWord b = code_.decode(strand);
    state.last_symbol = strand[strand.size() - 1];
    return b;
  }

 private:
  Construction1 code_;
};

class Construction2Codec final : public StrandCodec {
 public:
  Construction2Codec(unsigned m, unsigned n) : code_(m, n), m_(m) {}
  std::size_t source_bits() const override { return code_.source_bits(); }
  std::size_t strand_length() const override { return code_.strand_length(); }
  std::optional<unsigned> max_run() const override { return m_; }
  Oligo encode(const BinaryWord& source, EncoderState& state) const override {
    return code_.encode(source, state);
  }
  BinaryWord decode(const Oligo& strand, EncoderState& state) const override {
    return code_.decode(strand, state);
  }

 private:
  Construction2 code_;
  unsigned m_;
};

class QuaternaryBlockCodec final : public StrandCodec {
 public:
  explicit QuaternaryBlockCodec(BlockCodebook book) : book_(std::move(book)) {}
  std::size_t source_bits() const override { return book_.source_bits(); }
  std::size_t strand_length() const override { return book_.length(); }
  std::optional<unsigned> max_run() const override { return book_.max_run(); }
  Oligo encode(const BinaryWord& source, EncoderState& state) const override {
    if (source.size() != source_bits()) throw DomainError("source block has the wrong length");
    return Oligo(book_.encode(source.to_integer(), state));
  }
  BinaryWord decode(const Oligo& strand, EncoderState& state) const override {
    return BinaryWord::from_integer(book_.decode(strand.symbols(), state), source_bits());
  }

 private:
  BlockCodebook book_;
};

const std::map<std::string, CodecId>& codec_names() {
  static const std::map<std::string, CodecId> names = {
      {"construction1-knuth", CodecId::construction1_knuth},
      {"construction1-weak", CodecId::construction1_weak_knuth},
      {"construction2", CodecId::construction2},
      {"state-independent", CodecId::state_independent},
      {"state-dependent", CodecId::state_dependent},
  };
  return names;
}

}  // namespace

Construction1::Construction1(Balancer balancer) : balancer_(std::move(balancer)) {}

Oligo Construction1::encode(const BinaryWord& source) const {
  if (source.size() != source_bits()) {
    throw DomainError("Construction I expects " + std::to_string(source_bits()) + " source bits, got " +
                      std::to_string(source.size()));
  }
  const std::size_t l = balancer_.payload_bits();
  const BinaryWord u = balancer_.encode(source.slice(0, l));
  return combine_planes(source.slice(l, strand_length()), u);
}

BinaryWord Construction1::decode(const Oligo& strand) const {
  if (strand.size() != strand_length()) throw ConstraintViolation("strand has the wrong length");
  return concat(balancer_.decode(strand.msb_plane()), strand.lsb_plane());
}

Construction2::Construction2(unsigned m, unsigned n) : inner_(two_mode_rll_codebook(m, n)) {}

Oligo Construction2::encode(const BinaryWord& source, EncoderState& state) const {
  if (source.size() != source_bits()) {
    throw DomainError("Construction II expects " + std::to_string(source_bits()) + " source bits, got " +
                      std::to_string(source.size()));
  }
  const std::size_t k = inner_.source_bits();
  EncoderState bit_state;
  if (state.last_symbol) bit_state.last_symbol = *state.last_symbol & 1u;
  const BinaryWord u = symbols_to_bits(inner_.encode(source.slice(0, k).to_integer(), bit_state));
  const Oligo v = combine_planes(u, source.slice(k, strand_length()));
  state.last_symbol = v[v.size() - 1];
  return v;
}

BinaryWord Construction2::decode(const Oligo& strand, EncoderState& state) const {
  if (strand.size() != strand_length()) throw ConstraintViolation("strand has the wrong length");
  EncoderState bit_state;
  if (state.last_symbol) bit_state.last_symbol = *state.last_symbol & 1u;
  const std::size_t index = inner_.decode(strand.lsb_plane().bits(), bit_state);
  state.last_symbol = strand[strand.size() - 1];
  return concat(BinaryWord::from_integer(index, inner_.source_bits()), strand.msb_plane());
}

std::optional<CodecId> parse_codec_id(const std::string& name) {
  const auto& names = codec_names();
  const auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string codec_name(CodecId id) {
  for (const auto& [name, value] : codec_names()) {
    if (value == id) return name;
  }
  return "unknown";
}

std::unique_ptr<StrandCodec> make_codec(CodecId id, const CodecParams& params) {
  switch (id) {
    case CodecId::construction1_knuth:
      return std::make_unique<Construction1Codec>(Balancer::knuth(params.payload_bits));
    case CodecId::construction1_weak_knuth:
      return std::make_unique<Construction1Codec>(Balancer::weak_knuth(params.payload_bits, params.p0));
    case CodecId::construction2:
      return std::make_unique<Construction2Codec>(params.m, params.n);
    case CodecId::state_independent:
      return std::make_unique<QuaternaryBlockCodec>(state_independent_codebook(params.m, params.n));
    case CodecId::state_dependent:
      return std::make_unique<QuaternaryBlockCodec>(state_dependent_codebook(params.m, params.n));
  }
  throw ConfigurationError("unknown codec");
}

}  // namespace dnacode
