#include "dnacode/words.hpp"

#include <algorithm>
#include <cmath>

#include "dnacode/errors.hpp"

namespace dnacode {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw DomainError("binary word holds a symbol other than 0 or 1");
  }
}

BinaryWord BinaryWord::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw ParseError("expected '0' or '1'", i);
    bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::from_integer(std::uint64_t value, std::size_t width) {
  if (width > 64) throw DomainError("integer width exceeds 64 bits");
  std::vector<std::uint8_t> bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[width - 1 - i] = (value >> i) & 1u;
  return BinaryWord(std::move(bits));
}

std::size_t BinaryWord::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t BinaryWord::to_integer() const {
  if (bits_.size() > 64) throw DomainError("binary word too long for a 64-bit integer");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string BinaryWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

BinaryWord BinaryWord::slice(std::size_t first, std::size_t count) const {
  if (first + count > bits_.size()) throw DomainError("slice past end of binary word");
  return BinaryWord(std::vector<std::uint8_t>(bits_.begin() + first, bits_.begin() + first + count));
}

BinaryWord BinaryWord::flipped_prefix(std::size_t count) const {
  BinaryWord out = *this;
  for (std::size_t i = 0; i < count && i < out.bits_.size(); ++i) out.bits_[i] ^= 1u;
  return out;
}

BinaryWord& BinaryWord::append(const BinaryWord& tail) {
  bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return *this;
}

Oligo::Oligo(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  for (auto s : symbols_) {
    if (s > 3) throw DomainError("oligo holds a symbol outside {0,1,2,3}");
  }
}

Oligo Oligo::from_planes(const BinaryWord& lsb, const BinaryWord& msb) {
  if (lsb.size() != msb.size()) throw DomainError("bit planes differ in length");
  std::vector<std::uint8_t> v(lsb.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint8_t>(lsb[i] + 2 * msb[i]);
  return Oligo(std::move(v));
}

std::size_t Oligo::at_weight() const {
  return static_cast<std::size_t>(
      std::count_if(symbols_.begin(), symbols_.end(), [](std::uint8_t s) { return s > 1; }));
}

double Oligo::relative_unbalance() const {
  if (symbols_.empty()) return 0.0;
  return std::abs(static_cast<double>(at_weight()) / static_cast<double>(size()) - 0.5);
}

std::size_t Oligo::max_run() const {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    run = (i > 0 && symbols_[i] == symbols_[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

BinaryWord Oligo::lsb_plane() const {
  std::vector<std::uint8_t> bits(symbols_.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = symbols_[i] & 1u;
  return BinaryWord(std::move(bits));
}

BinaryWord Oligo::msb_plane() const {
  std::vector<std::uint8_t> bits(symbols_.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = symbols_[i] >> 1;
  return BinaryWord(std::move(bits));
}

std::string oligo_to_text(const Oligo& oligo) {
  static constexpr char kLetters[4] = {'G', 'C', 'A', 'T'};
  std::string s;
  s.reserve(oligo.size());
  for (auto sym : oligo.symbols()) s.push_back(kLetters[sym]);
  return s;
}

Oligo text_to_oligo(std::string_view text) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'G': case 'g': symbols.push_back(G); break;
      case 'C': case 'c': symbols.push_back(C); break;
      case 'A': case 'a': symbols.push_back(A); break;
      case 'T': case 't': symbols.push_back(T); break;
      default:
        throw ParseError(std::string("invalid nucleotide '") + text[i] + "' at position " +
                             std::to_string(i),
                         i);
    }
  }
  return Oligo(std::move(symbols));
}

}  // namespace dnacode
