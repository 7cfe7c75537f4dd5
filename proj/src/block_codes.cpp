#include "dnacode/block_codes.hpp"

#include <algorithm>
#include <string>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

void require_table_parameters(unsigned m, unsigned n) {
  if (m < 1) throw DomainError("maximum run must be at least 1");
  if (n < 1) throw DomainError("codeword length must be at least 1");
  if (n > kMaxTableLength) {
    throw ConfigurationError("codeword length " + std::to_string(n) + " exceeds the table limit of " +
                             std::to_string(kMaxTableLength));
  }
}

void extend(unsigned q, unsigned m, unsigned n, Symbols& prefix, unsigned run,
            std::vector<Symbols>& out) {
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  for (unsigned s = 0; s < q; ++s) {
    const bool continues = !prefix.empty() && prefix.back() == s;
    if (continues && run == m) continue;
    prefix.push_back(static_cast<std::uint8_t>(s));
    extend(q, m, n, prefix, continues ? run + 1 : 1, out);
    prefix.pop_back();
  }
}

std::size_t at_weight(const Symbols& word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](auto s) { return s > 1; }));
}

}  // namespace

unsigned floor_log2(std::uint64_t value) {
  if (value == 0) throw DomainError("floor_log2 of zero");
  unsigned e = 0;
  while (value >>= 1) ++e;
  return e;
}

std::vector<Symbols> constrained_words(unsigned q, unsigned m, unsigned n) {
  std::vector<Symbols> out;
  Symbols prefix;
  prefix.reserve(n);
  extend(q, m, n, prefix, 0, out);
  return out;
}

BlockCodebook::BlockCodebook(Kind kind, unsigned alphabet, unsigned m, unsigned n,
                             std::vector<std::vector<Symbols>> tables)
    : kind_(kind), alphabet_(alphabet), max_run_(m), length_(n), tables_(std::move(tables)) {
  source_bits_ = floor_log2(tables_.front().size());
  reverse_.resize(tables_.size());
  for (std::size_t t = 0; t < tables_.size(); ++t) {
    if (tables_[t].size() != tables_.front().size()) throw ConfigurationError("tables differ in size");
    for (std::size_t i = 0; i < tables_[t].size(); ++i) {
      if (!reverse_[t].emplace(pack(tables_[t][i]), i).second) {
        throw ConfigurationError("duplicate codeword within a table");
      }
    }
  }
}

std::uint32_t BlockCodebook::pack(const Symbols& word) const {
  std::uint32_t key = 0;
  for (auto s : word) key = (key << 2) | s;
  return key;
}

const Symbols& BlockCodebook::codeword(std::size_t table, std::size_t index) const {
  if (table >= tables_.size() || index >= tables_[table].size()) throw DomainError("codeword index out of range");
  return tables_[table][index];
}

std::optional<std::size_t> BlockCodebook::index_of(std::size_t table, const Symbols& word) const {
  if (table >= tables_.size() || word.size() != length_) return std::nullopt;
  for (auto s : word) {
    if (s >= alphabet_) return std::nullopt;
  }
  const auto it = reverse_[table].find(pack(word));
  if (it == reverse_[table].end()) return std::nullopt;
  return it->second;
}

std::size_t BlockCodebook::encoder_table(const EncoderState& state, std::size_t index) const {
  switch (kind_) {
    case Kind::two_mode:
      return state.last_symbol.value_or(1) == 1 ? 0 : 1;
    case Kind::state_independent:
      if (state.last_symbol && tables_[0][index].front() == *state.last_symbol) return 1;
      return 0;
    case Kind::state_dependent:
      return state.last_symbol.value_or(0);
  }
  return 0;
}

const Symbols& BlockCodebook::encode(std::size_t index, EncoderState& state) const {
  if (index >= size()) throw DomainError("source index " + std::to_string(index) + " out of range");
  const Symbols& word = tables_[encoder_table(state, index)][index];
  state.last_symbol = word.back();
  return word;
}

std::size_t BlockCodebook::decode(const Symbols& word, EncoderState& state) const {
  std::optional<std::size_t> index;
  switch (kind_) {
    case Kind::two_mode:
      if (!word.empty() && word.front() <= 1) index = index_of(word.front(), word);
      break;
    case Kind::state_independent:
      index = index_of(0, word);
      if (!index) index = index_of(1, word);
      break;
    case Kind::state_dependent:
      index = index_of(state.last_symbol.value_or(0), word);
      break;
  }
  if (!index) throw ConstraintViolation("received word is not a codeword");
  if (state.last_symbol && word.front() == *state.last_symbol) {
    throw ConstraintViolation("codeword continues the previous run across the block boundary");
  }
  state.last_symbol = word.back();
  return *index;
}

BlockCodebook two_mode_rll_codebook(unsigned m, unsigned n) {
  require_table_parameters(m, n);
  const auto words = constrained_words(2, m, n);
  if (words.size() < 4) throw DomainError("two-mode code needs N_2(m,n) >= 4");
  const std::size_t per_mode = std::size_t{1} << (floor_log2(words.size()) - 1);
  std::vector<std::vector<Symbols>> tables(2);
  for (const auto& w : words) {
    auto& table = tables[w.front()];
    if (table.size() < per_mode) table.push_back(w);
  }
  if (tables[0].size() != per_mode || tables[1].size() != per_mode) {
    throw ConfigurationError("a mode holds fewer than the required words");
  }
  return BlockCodebook(BlockCodebook::Kind::two_mode, 2, m, n, std::move(tables));
}

BlockCodebook state_independent_codebook(unsigned m, unsigned n) {
  require_table_parameters(m, n);
  const auto words = constrained_words(4, m, n);
  if (words.size() < 8) throw DomainError("state-independent code needs N_4(m,n) >= 8");
  // By symmetry each first symbol opens exactly N_4/4 words. Pair the i-th
  // word starting with G with the i-th starting with C, and likewise A with T.
  std::vector<std::vector<const Symbols*>> by_first(4);
  for (const auto& w : words) by_first[w.front()].push_back(&w);
  std::vector<std::pair<const Symbols*, const Symbols*>> pairs;
  for (unsigned a : {0u, 2u}) {
    if (by_first[a].size() != by_first[a + 1].size()) {
      throw ConfigurationError("first-symbol classes differ in size");
    }
    for (std::size_t i = 0; i < by_first[a].size(); ++i) pairs.emplace_back(by_first[a][i], by_first[a + 1][i]);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r) { return *l.first < *r.first; });
  const std::size_t size = std::size_t{1} << (floor_log2(words.size()) - 1);
  if (pairs.size() < size) throw ConfigurationError("pairing left too few representations");
  std::vector<std::vector<Symbols>> tables(2);
  for (std::size_t i = 0; i < size; ++i) {
    tables[0].push_back(*pairs[i].first);
    tables[1].push_back(*pairs[i].second);
  }
  return BlockCodebook(BlockCodebook::Kind::state_independent, 4, m, n, std::move(tables));
}

BlockCodebook state_dependent_codebook(unsigned m, unsigned n) {
  require_table_parameters(m, n);
  const auto words = constrained_words(4, m, n);
  if (words.size() % 4 != 0) {
    throw ConfigurationError("N_4(m,n) = " + std::to_string(words.size()) + " is not a multiple of 4");
  }
  const std::size_t available = 3 * words.size() / 4;
  const std::size_t size = std::size_t{1} << floor_log2(available);
  std::vector<std::vector<Symbols>> tables(4);
  for (std::uint8_t a = 0; a < 4; ++a) {
    std::vector<const Symbols*> table;
    for (const auto& w : words) {
      if (w.front() != a) table.push_back(&w);
    }
    // Drop the most unbalanced words first, lexicographically smallest first
    // among equals, then restore lexicographic order.
    std::stable_sort(table.begin(), table.end(), [n](const Symbols* l, const Symbols* r) {
      const auto dl = static_cast<long>(2 * at_weight(*l)) - static_cast<long>(n);
      const auto dr = static_cast<long>(2 * at_weight(*r)) - static_cast<long>(n);
      return std::labs(dl) > std::labs(dr);
    });
    table.erase(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(table.size() - size));
    std::sort(table.begin(), table.end(), [](const Symbols* l, const Symbols* r) { return *l < *r; });
    for (const auto* w : table) tables[a].push_back(*w);
  }
  return BlockCodebook(BlockCodebook::Kind::state_dependent, 4, m, n, std::move(tables));
}

}  // namespace dnacode
