#include "dnacode/oracle.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <sstream>

#include "dnacode/balancing.hpp"
#include "dnacode/block_codes.hpp"
#include "dnacode/errors.hpp"

namespace dnacode::oracle {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t longest_run(std::span<const std::uint8_t> s) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    run = (i > 0 && s[i] == s[i - 1]) ? run + 1 : 1;
    if (run > best) best = run;
  }
  return best;
}

std::size_t count_high(std::span<const std::uint8_t> s, std::uint8_t threshold) {
  std::size_t c = 0;
  for (auto x : s) c += x >= threshold ? 1 : 0;
  return c;
}

std::string render(std::span<const std::uint8_t> s) {
  std::string out;
  for (auto x : s) out.push_back(static_cast<char>('0' + x));
  return out;
}

void check_space(unsigned q, unsigned n) {
  double size = std::pow(static_cast<double>(q), n);
  if (size > static_cast<double>(kMaxCandidates)) {
    throw SearchSpaceTooLarge(std::to_string(q) + "^" + std::to_string(n) +
                              " words exceed the brute-force cap");
  }
}

// Visits every word of length n over {0..q-1} in odometer order.
void for_each_word(unsigned q, unsigned n, const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
  check_space(q, n);
  std::vector<std::uint8_t> word(n, 0);
  for (;;) {
    visit(word);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++word[i] < q) break;
      word[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

struct Failure {
  std::string what;
};

class Checker {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && !failure_) failure_ = describe();
  }
  bool failed() const { return failure_.has_value(); }
  std::uint64_t cases() const { return cases_; }
  const std::optional<std::string>& failure() const { return failure_; }

 private:
  std::uint64_t cases_ = 0;
  std::optional<std::string> failure_;
};

// Every codec gets the same treatment: all sources under all start states,
// then random streams of 50 blocks.
void validate_strand_codec(const StrandCodec& codec, Checker& check) {
  const std::size_t k = codec.source_bits();
  if (k > 20) throw DomainError("source space exceeds 2^20");
  const auto bound = codec.max_run();
  const auto unbalance = codec.unbalance_bound();
  std::vector<EncoderState> starts{EncoderState{}};
  if (bound) {
    for (std::uint8_t a = 0; a < 4; ++a) starts.push_back(EncoderState{a});
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k) && !check.failed(); ++x) {
    const BinaryWord source = BinaryWord::from_integer(x, k);
    for (const auto& start : starts) {
      EncoderState enc = start, dec = start;
      const Oligo strand = codec.encode(source, enc);
      const auto& s = strand.symbols();
      auto where = [&] {
        std::ostringstream o;
        o << "source " << source.to_string() << " strand " << render(s) << " state "
          << (start.last_symbol ? std::to_string(*start.last_symbol) : std::string("start"));
        return o.str();
      };
      check.expect(s.size() == codec.strand_length(), [&] { return where() + ": wrong strand length"; });
      if (bound) {
        check.expect(longest_run(s) <= *bound, [&] { return where() + ": run exceeds bound"; });
        check.expect(!start.last_symbol || s.front() != *start.last_symbol,
                     [&] { return where() + ": run continues across block boundary"; });
      }
      if (unbalance) {
        const double alpha = std::abs(static_cast<double>(count_high(s, 2)) / s.size() - 0.5);
        check.expect(alpha <= *unbalance + 1e-12, [&] { return where() + ": unbalance above bound"; });
      }
      BinaryWord back;
      try {
        back = codec.decode(strand, dec);
      } catch (const std::exception& e) {
        check.expect(false, [&] { return where() + ": decode threw " + e.what(); });
        continue;
      }
      check.expect(back == source, [&] { return where() + ": decoded " + back.to_string(); });
    }
  }
  std::mt19937_64 rng(0x5eed);
  const std::size_t blocks = 50;
  for (std::size_t joint = 0; joint < 10'000 && !check.failed(); joint += blocks) {
    std::vector<BinaryWord> sources;
    std::vector<std::uint8_t> stream;
    EncoderState enc;
    for (std::size_t b = 0; b < blocks; ++b) {
      sources.push_back(BinaryWord::from_integer(rng() & ((std::uint64_t{1} << k) - 1), k));
      const Oligo o = codec.encode(sources.back(), enc);
      stream.insert(stream.end(), o.symbols().begin(), o.symbols().end());
    }
    if (bound) {
      check.expect(longest_run(stream) <= *bound,
                   [&] { return "stream " + render(stream) + ": run exceeds bound"; });
    }
    EncoderState dec;
    const std::size_t n = codec.strand_length();
    for (std::size_t b = 0; b < blocks; ++b) {
      const Oligo o(std::vector<std::uint8_t>(stream.begin() + b * n, stream.begin() + (b + 1) * n));
      const BinaryWord back = codec.decode(o, dec);
      check.expect(back == sources[b], [&] { return "stream block " + std::to_string(b) + ": decode mismatch"; });
    }
  }
}

void validate_two_mode(unsigned m, unsigned n, Checker& check) {
  const BlockCodebook book = two_mode_rll_codebook(m, n);
  std::vector<EncoderState> starts{EncoderState{}, EncoderState{0}, EncoderState{1}};
  for (std::size_t x = 0; x < book.size() && !check.failed(); ++x) {
    for (const auto& start : starts) {
      EncoderState enc = start, dec = start;
      const Symbols word = book.encode(x, enc);
      auto where = [&] { return "index " + std::to_string(x) + " word " + render(word); };
      check.expect(longest_run(word) <= m, [&] { return where() + ": run exceeds bound"; });
      check.expect(!start.last_symbol || word.front() != *start.last_symbol,
                   [&] { return where() + ": run continues across block boundary"; });
      check.expect(book.decode(word, dec) == x, [&] { return where() + ": decode mismatch"; });
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (std::size_t joint = 0; joint < 10'000 && !check.failed(); joint += 50) {
    EncoderState enc;
    std::vector<std::uint8_t> stream;
    for (int b = 0; b < 50; ++b) {
      const Symbols& w = book.encode(rng() % book.size(), enc);
      stream.insert(stream.end(), w.begin(), w.end());
    }
    check.expect(longest_run(stream) <= m, [&] { return "stream " + render(stream) + ": run exceeds bound"; });
  }
}

void validate_knuth(unsigned n, Checker& check) {
  if (n > 20) throw DomainError("source space exceeds 2^20");
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n) && !check.failed(); ++x) {
    const BinaryWord u = BinaryWord::from_integer(x, n);
    const PrefixedWord c = knuth_encode(u);
    auto where = [&] { return "source " + u.to_string() + " body " + c.body.to_string(); };
    check.expect(2 * count_high(c.body.bits(), 1) == n, [&] { return where() + ": body not balanced"; });
    check.expect(2 * count_high(c.prefix.bits(), 1) == c.prefix.size(),
                 [&] { return where() + ": prefix not balanced"; });
    check.expect(knuth_decode(c) == u, [&] { return where() + ": decode mismatch"; });
  }
}

void validate_weak_knuth(unsigned n, unsigned p0, Checker& check) {
  if (n > 20) throw DomainError("source space exceeds 2^20");
  // Independent restatement of the guarantee: at most ceil(s/2) off balance.
  const std::uint64_t points = std::uint64_t{1} << p0;
  const std::uint64_t step = (n + points - 1) / points;
  const double limit = static_cast<double>((step + 1) / 2);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n) && !check.failed(); ++x) {
    const BinaryWord u = BinaryWord::from_integer(x, n);
    const PrefixedWord c = weak_knuth_encode(u, p0);
    auto where = [&] { return "source " + u.to_string() + " body " + c.body.to_string(); };
    const double offset = std::abs(static_cast<double>(count_high(c.body.bits(), 1)) - n / 2.0);
    check.expect(offset <= limit, [&] { return where() + ": unbalance above bound"; });
    check.expect(weak_knuth_decode(c, p0) == u, [&] { return where() + ": decode mismatch"; });
  }
}

const std::map<std::string, Target>& target_names() {
  static const std::map<std::string, Target> names = {
      {"knuth", Target::knuth},
      {"weak-knuth", Target::weak_knuth},
      {"two-mode", Target::two_mode},
      {"construction1-knuth", Target::construction1_knuth},
      {"construction1-weak", Target::construction1_weak_knuth},
      {"construction2", Target::construction2},
      {"state-independent", Target::state_independent},
      {"state-dependent", Target::state_dependent},
  };
  return names;
}

}  // namespace

BigCount brute_rll_count(unsigned q, unsigned m, unsigned n) {
  std::uint64_t count = 0;
  for_each_word(q, n, [&](const std::vector<std::uint8_t>& w) { count += longest_run(w) <= m ? 1 : 0; });
  return count;
}

std::vector<BigCount> brute_weight_profile(unsigned q, unsigned m, unsigned n) {
  if (q != 2 && q != 4) throw DomainError("weight is defined for binary and quaternary words");
  // Binary weight counts ones; quaternary weight counts A and T (symbols 2, 3).
  const std::uint8_t threshold = q == 2 ? 1 : 2;
  std::vector<std::uint64_t> counts(n + 1, 0);
  for_each_word(q, n, [&](const std::vector<std::uint8_t>& w) {
    if (longest_run(w) <= m) ++counts[count_high(w, threshold)];
  });
  return {counts.begin(), counts.end()};
}

BigCount brute_weight_count(unsigned q, unsigned m, unsigned w, unsigned n) {
  if (w > n) throw DomainError("weight exceeds length");
  return brute_weight_profile(q, m, n)[w];
}

BigCount brute_balance_count(unsigned n, double a, BoundaryMode mode) {
  if (a < 0.0) throw DomainError("unbalance bound must be non-negative");
  std::uint64_t count = 0;
  for_each_word(4, n, [&](const std::vector<std::uint8_t>& w) {
    const double alpha = std::abs(static_cast<double>(count_high(w, 2)) / n - 0.5);
    // Values of alpha are 1/(2n) apart; anything closer to a than 1e-12 is a.
    const bool ok = mode == BoundaryMode::strict ? alpha < a - 1e-12 : alpha <= a + 1e-12;
    count += ok ? 1 : 0;
  });
  return count;
}

BruteForceReport report_rll_count(unsigned q, unsigned m, unsigned n) {
  const auto t0 = Clock::now();
  BruteForceReport r;
  r.subject = "rll-count";
  r.parameters = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
  r.count = brute_rll_count(q, m, n);
  r.elapsed = Clock::now() - t0;
  return r;
}

BruteForceReport report_balance_count(unsigned n, double a, BoundaryMode mode) {
  const auto t0 = Clock::now();
  BruteForceReport r;
  r.subject = "balance-count";
  std::ostringstream p;
  p << "n=" << n << " a=" << a << (mode == BoundaryMode::strict ? " strict" : " inclusive");
  r.parameters = p.str();
  r.count = brute_balance_count(n, a, mode);
  r.elapsed = Clock::now() - t0;
  return r;
}

std::optional<Target> parse_target(const std::string& name) {
  const auto it = target_names().find(name);
  if (it == target_names().end()) return std::nullopt;
  return it->second;
}

std::string target_name(Target target) {
  for (const auto& [name, t] : target_names()) {
    if (t == target) return name;
  }
  return "unknown";
}

BruteForceReport validate_codec(Target target, const CodecParams& params) {
  const auto t0 = Clock::now();
  BruteForceReport r;
  r.subject = target_name(target);
  std::ostringstream p;
  switch (target) {
    case Target::knuth:
      p << "n=" << params.n;
      break;
    case Target::weak_knuth:
      p << "n=" << params.n << " p0=" << params.p0;
      break;
    case Target::construction1_knuth:
      p << "l=" << params.payload_bits;
      break;
    case Target::construction1_weak_knuth:
      p << "l=" << params.payload_bits << " p0=" << params.p0;
      break;
    default:
      p << "m=" << params.m << " n=" << params.n;
  }
  r.parameters = p.str();
  Checker check;
  switch (target) {
    case Target::knuth:
      validate_knuth(params.n, check);
      break;
    case Target::weak_knuth:
      validate_weak_knuth(params.n, params.p0, check);
      break;
    case Target::two_mode:
      validate_two_mode(params.m, params.n, check);
      break;
    case Target::construction1_knuth:
      validate_strand_codec(*make_codec(CodecId::construction1_knuth, params), check);
      break;
    case Target::construction1_weak_knuth:
      validate_strand_codec(*make_codec(CodecId::construction1_weak_knuth, params), check);
      break;
    case Target::construction2:
      validate_strand_codec(*make_codec(CodecId::construction2, params), check);
      break;
    case Target::state_independent:
      validate_strand_codec(*make_codec(CodecId::state_independent, params), check);
      break;
    case Target::state_dependent:
      validate_strand_codec(*make_codec(CodecId::state_dependent, params), check);
      break;
  }
  r.count = check.cases();
  r.passed = !check.failed();
  if (check.failure()) r.counterexample = *check.failure();
  r.elapsed = Clock::now() - t0;
  return r;
}

}  // namespace dnacode::oracle
