#include "dnacode/stream_io.hpp"

#include <istream>
#include <ostream>

#include "dnacode/errors.hpp"

namespace dnacode {

std::vector<std::uint8_t> frame_payload(std::span<const std::uint8_t> bytes, std::size_t block_bits) {
  if (block_bits == 0 || block_bits > 256) throw DomainError("block size must be 1..256 bits");
  std::vector<std::uint8_t> bits;
  bits.reserve(8 * bytes.size() + block_bits + 8);
  for (auto byte : bytes) {
    for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1u);
  }
  const std::size_t used = bits.size() + 8;
  const std::size_t pad = (block_bits - used % block_bits) % block_bits;
  bits.insert(bits.end(), pad, 0);
  for (int i = 7; i >= 0; --i) bits.push_back((pad >> i) & 1u);
  return bits;
}

std::vector<std::uint8_t> unframe_payload(std::span<const std::uint8_t> bits) {
  if (bits.size() < 8) throw ConstraintViolation("stream too short for the pad trailer");
  std::size_t pad = 0;
  for (std::size_t i = bits.size() - 8; i < bits.size(); ++i) pad = (pad << 1) | bits[i];
  const std::size_t body = bits.size() - 8;
  if (pad > body || (body - pad) % 8 != 0) throw ConstraintViolation("pad trailer is inconsistent with the stream");
  for (std::size_t i = body - pad; i < body; ++i) {
    if (bits[i] != 0) throw ConstraintViolation("non-zero padding bit");
  }
  std::vector<std::uint8_t> bytes((body - pad) / 8);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    std::uint8_t v = 0;
    for (std::size_t j = 0; j < 8; ++j) v = static_cast<std::uint8_t>((v << 1) | bits[8 * i + j]);
    bytes[i] = v;
  }
  return bytes;
}

std::vector<std::string> encode_payload(const StrandCodec& codec, std::span<const std::uint8_t> bytes) {
  const std::size_t k = codec.source_bits();
  const auto bits = frame_payload(bytes, k);
  std::vector<std::string> records;
  records.reserve(bits.size() / k);
  EncoderState state;
  for (std::size_t at = 0; at < bits.size(); at += k) {
    const BinaryWord block(std::vector<std::uint8_t>(bits.begin() + at, bits.begin() + at + k));
    records.push_back(oligo_to_text(codec.encode(block, state)));
  }
  return records;
}

std::vector<std::uint8_t> decode_strands(const StrandCodec& codec, const std::vector<std::string>& records) {
  std::vector<std::uint8_t> bits;
  EncoderState state;
  const auto bound = codec.max_run();
  std::uint8_t previous = 0;
  std::size_t run = 0;
  for (std::size_t line = 1; line <= records.size(); ++line) {
    const std::string& text = records[line - 1];
    if (text.empty()) continue;
    try {
      const Oligo strand = text_to_oligo(text);
      if (strand.size() != codec.strand_length()) {
        throw ConstraintViolation("strand length " + std::to_string(strand.size()) + ", expected " +
                                  std::to_string(codec.strand_length()));
      }
      if (bound) {
        for (auto s : strand.symbols()) {
          run = (run > 0 && s == previous) ? run + 1 : 1;
          previous = s;
          if (run > *bound) {
            throw ConstraintViolation("homopolymer run exceeds " + std::to_string(*bound));
          }
        }
      }
      const BinaryWord block = codec.decode(strand, state);
      bits.insert(bits.end(), block.bits().begin(), block.bits().end());
    } catch (const ParseError& e) {
      throw DecodeError("line " + std::to_string(line) + ": " + e.what(), line);
    } catch (const ConstraintViolation& e) {
      throw DecodeError("line " + std::to_string(line) + ": " + e.what(), line);
    }
  }
  try {
    return unframe_payload(bits);
  } catch (const ConstraintViolation& e) {
    throw DecodeError(std::string("trailer: ") + e.what(), records.size());
  }
}

std::vector<std::string> read_records(std::istream& in) {
  std::vector<std::string> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    records.push_back(line);
  }
  return records;
}

void write_records(std::ostream& out, const std::vector<std::string>& records) {
  for (const auto& r : records) out << r << '\n';
}

}  // namespace dnacode
