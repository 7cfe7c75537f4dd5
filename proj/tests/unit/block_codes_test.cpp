#include <doctest.h>

#include <algorithm>
#include <set>

#include "dnacode/block_codes.hpp"
#include "dnacode/counting.hpp"
#include "dnacode/errors.hpp"

using namespace dnacode;

namespace {

std::size_t run_of(const Symbols& s) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    run = (i > 0 && s[i] == s[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

std::size_t offset(const Symbols& s) {
  long at = 0;
  for (auto x : s) at += x >= 2;
  return static_cast<std::size_t>(std::labs(2 * at - static_cast<long>(s.size())));
}

void check_tables(const BlockCodebook& book) {
  for (std::size_t t = 0; t < book.mode_count(); ++t) {
    std::set<Symbols> seen;
    for (std::size_t i = 0; i < book.size(); ++i) {
      const auto& w = book.codeword(t, i);
      CHECK(w.size() == book.length());
      CHECK(run_of(w) <= book.max_run());
      CHECK(seen.insert(w).second);
      CHECK(book.index_of(t, w) == i);
    }
  }
}

}  // namespace

TEST_SUITE("block_codes") {

TEST_CASE("constrained words are complete and ordered") {
  for (unsigned q : {2u, 4u}) {
    for (unsigned m = 1; m <= 3; ++m) {
      const auto words = constrained_words(q, m, 6);
      CHECK(words.size() == rll_count(q, m, 6));
      CHECK(std::is_sorted(words.begin(), words.end()));
    }
  }
}

TEST_CASE("two-mode code sizes") {
  const auto book = two_mode_rll_codebook(3, 5);
  CHECK(book.mode_count() == 2);
  CHECK(book.size() == 8);  // N_2(3,5) = 26
  CHECK(book.source_bits() == 3);
  check_tables(book);
  for (std::size_t i = 0; i < book.size(); ++i) {
    CHECK(book.codeword(0, i).front() == 0);
    CHECK(book.codeword(1, i).front() == 1);
  }
  CHECK_THROWS_AS(two_mode_rll_codebook(1, 5), DomainError);
}

TEST_CASE("per-mode and whole-code truncation agree") {
  // Whole code: 2^floor(log2 N_2) words split over two modes. Per mode:
  // 2^(floor(log2 N_2) - 1) words each. Both fit because every mode holds
  // N_2 / 2 words, and both give rate (n - 1 + floor(log2 N_2)) / n.
  for (unsigned m = 2; m <= 4; ++m) {
    for (unsigned n = 5; n <= 10; ++n) {
      const auto n2 = rll_count(2, m, n);
      const unsigned whole = floor_log2(static_cast<std::uint64_t>(n2));
      const auto book = two_mode_rll_codebook(m, n);
      CHECK(n2 % 2 == 0);
      CHECK(book.source_bits() + 1 == whole);
      CHECK(2 * book.size() == std::size_t{1} << whole);
      CHECK(book.size() <= n2 / 2);
    }
  }
}

TEST_CASE("state-independent code") {
  const auto book = state_independent_codebook(3, 5);
  CHECK(book.mode_count() == 2);
  CHECK(book.size() == 256);  // 2^(floor(log2 996) - 1)
  CHECK(book.rate() == doctest::Approx(8.0 / 5.0));
  check_tables(book);
  for (std::size_t i = 0; i < book.size(); ++i) {
    CHECK(book.codeword(0, i).front() != book.codeword(1, i).front());
  }
  // Decoding needs no state: every representation is unique across tables.
  std::set<Symbols> all;
  for (std::size_t t = 0; t < 2; ++t) {
    for (std::size_t i = 0; i < book.size(); ++i) CHECK(all.insert(book.codeword(t, i)).second);
  }
  for (std::uint8_t prev = 0; prev < 4; ++prev) {
    for (std::size_t i = 0; i < book.size(); ++i) {
      EncoderState enc{prev}, dec{};
      const auto w = book.encode(i, enc);
      CHECK(w.front() != prev);
      CHECK(book.decode(w, dec) == i);
    }
  }
}

TEST_CASE("state-dependent code sizes at m = 3, n = 5") {
  const auto book = state_dependent_codebook(3, 5);
  CHECK(book.mode_count() == 4);
  CHECK(3 * rll_count(4, 3, 5) / 4 == 747);
  CHECK(book.size() == 512);
  CHECK(book.source_bits() == 9);
  CHECK(book.rate() == doctest::Approx(9.0 / 5.0));
  check_tables(book);
  for (std::uint8_t a = 0; a < 4; ++a) {
    for (std::size_t i = 0; i < book.size(); ++i) CHECK(book.codeword(a, i).front() != a);
  }
}

TEST_CASE("state-dependent truncation bars the most unbalanced words") {
  const auto book = state_dependent_codebook(3, 5);
  const auto words = constrained_words(4, 3, 5);
  for (std::uint8_t a = 0; a < 4; ++a) {
    std::set<Symbols> kept;
    std::size_t worst_kept = 0;
    for (std::size_t i = 0; i < book.size(); ++i) {
      kept.insert(book.codeword(a, i));
      worst_kept = std::max(worst_kept, offset(book.codeword(a, i)));
    }
    for (const auto& w : words) {
      if (w.front() == a || kept.count(w)) continue;
      CHECK(offset(w) >= worst_kept);
    }
    CHECK(std::is_sorted(kept.begin(), kept.end()));
  }
}

TEST_CASE("state-dependent decoding with the true previous symbol") {
  const auto book = state_dependent_codebook(2, 6);
  for (std::uint8_t prev = 0; prev < 4; ++prev) {
    for (std::size_t i = 0; i < book.size(); ++i) {
      EncoderState enc{prev}, dec{prev};
      const auto w = book.encode(i, enc);
      CHECK(book.decode(w, dec) == i);
      CHECK(dec.last_symbol == w.back());
    }
  }
  EncoderState wrong{0};
  Symbols starts_with_g = book.codeword(1, 0);
  REQUIRE(starts_with_g.front() == 0);
  CHECK_THROWS_AS(book.decode(starts_with_g, wrong), ConstraintViolation);
}

TEST_CASE("concatenated codewords keep the run bound") {
  const auto books = {two_mode_rll_codebook(2, 6), state_independent_codebook(2, 5), state_dependent_codebook(1, 6)};
  for (const auto& book : books) {
    EncoderState state;
    Symbols stream;
    for (std::size_t k = 0; k < 500; ++k) {
      const auto& w = book.encode((k * 2654435761u) % book.size(), state);
      stream.insert(stream.end(), w.begin(), w.end());
    }
    CHECK(run_of(stream) <= book.max_run());
  }
}

TEST_CASE("table limits") {
  CHECK_THROWS_AS(state_dependent_codebook(3, 15), ConfigurationError);
  CHECK_THROWS_AS(state_dependent_codebook(0, 5), DomainError);
  const auto book = state_dependent_codebook(3, 5);
  EncoderState s;
  CHECK_THROWS_AS(book.encode(512, s), DomainError);
  CHECK_THROWS_AS(book.decode(Symbols{0, 0, 0, 0, 1}, s), ConstraintViolation);
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(996) == 9);
}

}
