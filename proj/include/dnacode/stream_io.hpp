#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnacode/constructions.hpp"

namespace dnacode {

/// Payload framing. The bit stream is the payload bytes (most significant
/// bit first), then p zero bits, then one trailer byte holding p, where p is
/// the smallest count that makes the total a multiple of the block size.
/// Block sizes above 256 bits cannot be framed.
std::vector<std::uint8_t> frame_payload(std::span<const std::uint8_t> bytes, std::size_t block_bits);

/// Inverse of frame_payload; throws ConstraintViolation on a malformed trailer.
std::vector<std::uint8_t> unframe_payload(std::span<const std::uint8_t> bits);

/// One strand per record, uppercase ACGT.
std::vector<std::string> encode_payload(const StrandCodec& codec, std::span<const std::uint8_t> bytes);

/// Failure while decoding a strand file; line() is one-based.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Checks every record (alphabet, length, codeword, homopolymer bound across
/// record boundaries) and returns the payload. Blank lines are skipped.
std::vector<std::uint8_t> decode_strands(const StrandCodec& codec, const std::vector<std::string>& records);

std::vector<std::string> read_records(std::istream& in);
void write_records(std::ostream& out, const std::vector<std::string>& records);

}  // namespace dnacode
