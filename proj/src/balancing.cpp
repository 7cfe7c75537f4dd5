#include "dnacode/balancing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

std::size_t distance_from_half(std::size_t weight, std::size_t n) {
  const std::size_t twice = 2 * weight;
  return twice > n ? twice - n : n - twice;
}

// Prefix maps are small and reused for every word; build each size once.
const BalancedPrefixMap& cached_prefix_map(std::size_t count, std::size_t length) {
  static std::mutex guard;
  static std::map<std::pair<std::size_t, std::size_t>, BalancedPrefixMap> cache;
  std::lock_guard lock(guard);
  auto it = cache.find({count, length});
  if (it == cache.end()) it = cache.emplace(std::pair{count, length}, BalancedPrefixMap(count, length)).first;
  return it->second;
}

std::size_t weak_step(std::size_t n, unsigned p0) {
  const std::size_t points = std::size_t{1} << p0;
  return (n + points - 1) / points;
}

void require_weak_parameters(std::size_t n, unsigned p0) {
  if (p0 == 0) throw DomainError("weak Knuth needs p0 >= 1");
  if (p0 >= 32 || (std::size_t{1} << p0) > n) {
    throw DomainError("2^p0 = " + std::to_string(1ull << std::min(p0, 63u)) +
                      " balancing positions exceed word length " + std::to_string(n));
  }
}

}  // namespace

BalancedPrefixMap::BalancedPrefixMap(std::size_t count, std::size_t length) : length_(length) {
  if (length % 2 != 0 || length > 62) throw DomainError("prefix length must be even and at most 62");
  // Lexicographic walk over words of the given length with length/2 ones.
  std::vector<std::uint8_t> bits(length, 0);
  std::fill(bits.end() - static_cast<std::ptrdiff_t>(length / 2), bits.end(), 1);
  do {
    if (words_.size() == count) break;
    words_.emplace_back(bits);
  } while (std::next_permutation(bits.begin(), bits.end()));
  if (words_.size() < count) {
    throw ConfigurationError("only " + std::to_string(words_.size()) + " balanced words of length " +
                             std::to_string(length) + ", need " + std::to_string(count));
  }
}

const BinaryWord& BalancedPrefixMap::word(std::size_t index) const {
  if (index >= words_.size()) throw DomainError("prefix index out of range");
  return words_[index];
}

std::size_t BalancedPrefixMap::index_of(const BinaryWord& word) const {
  const auto it = std::lower_bound(words_.begin(), words_.end(), word);
  if (it == words_.end() || *it != word) throw ConstraintViolation("prefix " + word.to_string() + " is not a codeword");
  return static_cast<std::size_t>(it - words_.begin());
}

unsigned knuth_prefix_bits(std::size_t n) {
  unsigned bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

PrefixedWord knuth_encode(const BinaryWord& word) {
  const std::size_t n = word.size();
  if (n == 0 || n % 2 != 0) throw DomainError("Knuth balancing needs a non-empty even length");
  std::size_t weight = word.weight();
  std::size_t k = 1;
  for (; k <= n; ++k) {
    weight = word[k - 1] ? weight - 1 : weight + 1;
    if (2 * weight == n) break;
  }
  const unsigned p0 = std::max(1u, knuth_prefix_bits(n));
  const auto& map = cached_prefix_map(n, 2 * p0);
  return {map.word(k - 1), word.flipped_prefix(k)};
}

BinaryWord knuth_decode(const PrefixedWord& codeword) {
  const std::size_t n = codeword.body.size();
  if (n == 0 || n % 2 != 0) throw DomainError("Knuth balancing needs a non-empty even length");
  const unsigned p0 = std::max(1u, knuth_prefix_bits(n));
  if (codeword.prefix.size() != 2 * p0) throw ConstraintViolation("Knuth prefix has the wrong length");
  const std::size_t k = cached_prefix_map(n, 2 * p0).index_of(codeword.prefix) + 1;
  return codeword.body.flipped_prefix(k);
}

PrefixedWord weak_knuth_encode(const BinaryWord& word, unsigned p0) {
  const std::size_t n = word.size();
  require_weak_parameters(n, p0);
  const std::size_t points = std::size_t{1} << p0;
  const std::size_t step = weak_step(n, p0);
  std::size_t best_index = 0, best_distance = n + 1;
  std::size_t weight = word.weight(), flipped = 0;
  for (std::size_t i = 0; i < points; ++i) {
    const std::size_t position = std::min(1 + i * step, n);
    for (; flipped < position; ++flipped) weight = word[flipped] ? weight - 1 : weight + 1;
    const std::size_t d = distance_from_half(weight, n);
    if (d < best_distance) {
      best_distance = d;
      best_index = i;
    }
  }
  const std::size_t position = std::min(1 + best_index * step, n);
  return {cached_prefix_map(points, 2 * p0).word(best_index), word.flipped_prefix(position)};
}

BinaryWord weak_knuth_decode(const PrefixedWord& codeword, unsigned p0) {
  const std::size_t n = codeword.body.size();
  require_weak_parameters(n, p0);
  if (codeword.prefix.size() != 2 * p0) throw ConstraintViolation("weak Knuth prefix has the wrong length");
  const std::size_t index = cached_prefix_map(std::size_t{1} << p0, 2 * p0).index_of(codeword.prefix);
  return codeword.body.flipped_prefix(std::min(1 + index * weak_step(n, p0), n));
}

double weak_knuth_unbalance_bound(std::size_t n, unsigned p0) {
  require_weak_parameters(n, p0);
  const std::size_t s = weak_step(n, p0);
  return static_cast<double>((s + 1) / 2) / static_cast<double>(n);
}

Balancer::Balancer(Kind kind, std::size_t payload_bits, unsigned p0)
    : kind_(kind), payload_bits_(payload_bits), p0_(p0), prefix_bits_(2 * p0) {}

Balancer Balancer::knuth(std::size_t payload_bits) {
  if (payload_bits == 0 || payload_bits % 2 != 0) {
    throw DomainError("Knuth balancing needs a non-empty even payload length");
  }
  return Balancer(Kind::knuth, payload_bits, std::max(1u, knuth_prefix_bits(payload_bits)));
}

Balancer Balancer::weak_knuth(std::size_t payload_bits, unsigned p0) {
  require_weak_parameters(payload_bits, p0);
  return Balancer(Kind::weak_knuth, payload_bits, p0);
}

double Balancer::unbalance_bound() const {
  if (kind_ == Kind::knuth) return 0.0;
  // The prefix is exactly balanced, so only the body's deviation remains.
  const std::size_t s = weak_step(payload_bits_, p0_);
  const double body_offset = static_cast<double>((s + 1) / 2);
  return body_offset / static_cast<double>(output_bits());
}

BinaryWord Balancer::encode(const BinaryWord& payload) const {
  if (payload.size() != payload_bits_) throw DomainError("payload length does not match the balancer");
  const PrefixedWord pw = kind_ == Kind::knuth ? knuth_encode(payload) : weak_knuth_encode(payload, p0_);
  return pw.joined();
}

BinaryWord Balancer::decode(const BinaryWord& balanced) const {
  if (balanced.size() != output_bits()) throw ConstraintViolation("balanced word has the wrong length");
  const PrefixedWord pw{balanced.slice(0, prefix_bits_), balanced.slice(prefix_bits_, payload_bits_)};
  return kind_ == Kind::knuth ? knuth_decode(pw) : weak_knuth_decode(pw, p0_);
}

}  // namespace dnacode
