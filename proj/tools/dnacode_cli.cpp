#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "dnacode/asymptotics.hpp"
#include "dnacode/counting.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/oracle.hpp"
#include "dnacode/stream_io.hpp"
#include "dnacode/tables.hpp"

namespace fs = std::filesystem;
using namespace dnacode;

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

// Relative --out paths land in this directory when it is set.
constexpr const char* kOutDirVariable = "DNACODE_OUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutDirVariable); dir && *dir) p = fs::path(dir) / p;
  }
  return p;
}

// Runs body with the requested output stream: stdout or the --out file.
template <typename Body>
void with_output(const std::string& out, bool binary, Body body) {
  if (out.empty()) {
    body(std::cout);
    return;
  }
  const fs::path p = resolve_output(out);
  std::ofstream file(p, binary ? std::ios::binary : std::ios::out);
  if (!file) throw DataError("cannot write " + p.string());
  body(file);
  if (!file) throw DataError("write failed for " + p.string());
}

std::vector<std::uint8_t> read_bytes(const std::string& in) {
  if (in.empty() || in == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(in, std::ios::binary);
  if (!file) throw DataError("cannot read " + in);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

unsigned parse_run(const std::string& text) {
  if (text == "inf") return kNoRunLimit;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0 || v >= kNoRunLimit) throw UsageError("--m must be a positive integer or 'inf'");
  return static_cast<unsigned>(v);
}

BoundaryMode parse_boundary(const std::string& text) {
  if (text == "strict") return BoundaryMode::strict;
  if (text == "inclusive") return BoundaryMode::inclusive;
  throw UsageError("--boundary must be strict or inclusive");
}

struct CodecOptions {
  std::string code = "state-dependent";
  CodecParams params;
  std::string in;
  std::string out;
};

void add_codec_options(CLI::App* cmd, CodecOptions& o) {
  cmd->add_option("--code", o.code, "construction1-knuth, construction1-weak, construction2, state-independent, state-dependent")
      ->capture_default_str();
  cmd->add_option("--m", o.params.m, "maximum homopolymer run")->capture_default_str();
  cmd->add_option("--n", o.params.n, "block length in nucleotides")->capture_default_str();
  cmd->add_option("--payload-bits", o.params.payload_bits, "balancer payload bits")->capture_default_str();
  cmd->add_option("--p0", o.params.p0, "weak Knuth prefix parameter")->capture_default_str();
  cmd->add_option("--in", o.in, "input file (default stdin)");
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

std::unique_ptr<StrandCodec> codec_from(const CodecOptions& o) {
  const auto id = parse_codec_id(o.code);
  if (!id) throw UsageError("unknown code '" + o.code + "'");
  return make_codec(*id, o.params);
}

void print_report(std::ostream& out, const oracle::BruteForceReport& r) {
  out << (r.passed ? "ok   " : "FAIL ") << r.subject << ' ' << r.parameters << " cases=" << to_decimal(r.count)
      << " ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << '\n';
  if (!r.passed) out << "     " << r.counterexample << '\n';
}

// Oracle against formula on the count grid, then every codec validation.
bool run_verify(std::ostream& out, unsigned max_n, unsigned max_m) {
  bool all = true;
  for (unsigned q : {2u, 4u}) {
    const Alphabet kind = q == 2 ? Alphabet::binary : Alphabet::quaternary;
    for (unsigned m = 1; m <= max_m; ++m) {
      unsigned mismatches = 0;
      std::string first;
      const auto t0 = std::chrono::steady_clock::now();
      for (unsigned n = 1; n <= max_n; ++n) {
        const auto brute = oracle::brute_weight_profile(q, m, n);
        const auto formula = weight_profile(kind, m, n);
        for (unsigned w = 0; w <= n; ++w) {
          if (brute[w] != formula.counts[w]) {
            if (mismatches++ == 0) {
              first = "n=" + std::to_string(n) + " w=" + std::to_string(w) + " oracle=" + to_decimal(brute[w]) +
                      " formula=" + to_decimal(formula.counts[w]);
            }
          }
        }
        const BigCount total = std::accumulate(brute.begin(), brute.end(), BigCount(0));
        if (total != rll_count(q, m, n) || total != rll_count_gf(q, m, n)) {
          if (mismatches++ == 0) first = "n=" + std::to_string(n) + " total mismatch";
        }
      }
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
      out << (mismatches ? "FAIL " : "ok   ") << "weight-profile q=" << q << " m=" << m << " n=1.." << max_n
          << " ms=" << ms.count() << '\n';
      if (mismatches) out << "     " << first << '\n';
      all = all && mismatches == 0;
    }
  }
  for (unsigned n = 1; n <= std::min(max_n, 10u); ++n) {
    for (double a : {0.05, 0.1, 0.2, 0.25, 0.3, 0.5}) {
      for (auto mode : {BoundaryMode::strict, BoundaryMode::inclusive}) {
        const auto r = oracle::report_balance_count(n, a, mode);
        if (r.count != near_balanced_count(n, a, mode)) {
          out << "FAIL " << r.subject << ' ' << r.parameters << " oracle=" << to_decimal(r.count)
              << " formula=" << to_decimal(near_balanced_count(n, a, mode)) << '\n';
          all = false;
        }
      }
    }
  }
  out << "ok   balance-count checked n=1.." << std::min(max_n, 10u) << '\n';

  using oracle::Target;
  const std::vector<std::pair<Target, CodecParams>> codecs = {
      {Target::knuth, {.n = 10}},
      {Target::knuth, {.n = 12}},
      {Target::weak_knuth, {.n = 10, .p0 = 2}},
      {Target::weak_knuth, {.n = 12, .p0 = 3}},
      {Target::two_mode, {.m = 2, .n = 6}},
      {Target::two_mode, {.m = 3, .n = 8}},
      {Target::construction1_knuth, {.payload_bits = 6}},
      {Target::construction1_weak_knuth, {.payload_bits = 8, .p0 = 2}},
      {Target::construction2, {.m = 2, .n = 6}},
      {Target::construction2, {.m = 3, .n = 5}},
      {Target::state_independent, {.m = 3, .n = 5}},
      {Target::state_independent, {.m = 1, .n = 7}},
      {Target::state_dependent, {.m = 3, .n = 5}},
      {Target::state_dependent, {.m = 1, .n = 7}},
  };
  for (const auto& [target, params] : codecs) {
    const auto r = oracle::validate_codec(target, params);
    print_report(out, r);
    all = all && r.passed;
  }
  out << (all ? "verify: all checks passed\n" : "verify: FAILED\n");
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting, capacity and codecs for run-limited, GC-balanced DNA strands"};
  app.require_subcommand(1);

  int precision = 4;
  std::string out;

  auto* tables = app.add_subcommand("tables", "print a table as CSV");
  std::string table_id;
  tables->add_option("id", table_id, "capacity, coefficient, eta, two-mode, state-indep, state-dep, gamma")
      ->required();
  tables->add_option("--precision", precision, "decimals")->capture_default_str();
  tables->add_option("--out", out, "output file");

  auto* figure = app.add_subcommand("figure1", "redundancy of nearly balanced strands versus length, as CSV");
  std::vector<double> a_list{0.05, 0.10, 0.15};
  unsigned n_min = 10, n_max = 200;
  std::string boundary = "strict";
  figure->add_option("--a", a_list, "unbalance bounds")->delimiter(',')->capture_default_str();
  figure->add_option("--n-min", n_min)->capture_default_str();
  figure->add_option("--n-max", n_max)->capture_default_str();
  figure->add_option("--boundary", boundary, "strict or inclusive")->capture_default_str();
  figure->add_option("--precision", precision, "decimals")->capture_default_str();
  figure->add_option("--out", out, "output file");

  auto* count = app.add_subcommand("count", "number of run-limited strands");
  unsigned q = 4, n = 10;
  std::string m_text = "3", method = "recurrence";
  bool profile = false;
  count->add_option("--q", q, "alphabet size")->capture_default_str();
  count->add_option("--m", m_text, "maximum run, or inf")->capture_default_str();
  count->add_option("--n", n, "length")->capture_default_str();
  count->add_flag("--weight-profile", profile, "counts per weight as CSV");
  count->add_option("--method", method, "recurrence, gf, transfer or oracle")->capture_default_str();

  auto* cap = app.add_subcommand("capacity", "dominant root and capacity");
  cap->add_option("--q", q, "alphabet size")->capture_default_str();
  cap->add_option("--m", m_text, "maximum run")->capture_default_str();
  cap->add_option("--precision", precision, "decimals")->capture_default_str();

  auto* red = app.add_subcommand("redundancy", "redundancy in bits");
  std::optional<double> a_bound;
  bool asymptotic = false;
  red->add_option("--q", q, "alphabet size")->capture_default_str();
  red->add_option("--m", m_text, "maximum run")->capture_default_str();
  red->add_option("--n", n, "length")->capture_default_str();
  red->add_option("--a", a_bound, "also bound the relative unbalance by a");
  red->add_flag("--asymptotic", asymptotic, "use the asymptotic estimate");
  red->add_option("--boundary", boundary, "strict or inclusive")->capture_default_str();
  red->add_option("--precision", precision, "decimals")->capture_default_str();

  CodecOptions enc_opts, dec_opts;
  auto* enc = app.add_subcommand("encode", "bytes to ACGT strands, one per line");
  add_codec_options(enc, enc_opts);
  auto* dec = app.add_subcommand("decode", "ACGT strands back to bytes");
  add_codec_options(dec, dec_opts);

  auto* verify = app.add_subcommand("verify", "check formulas and codecs against exhaustive enumeration");
  unsigned verify_n = 11, verify_m = 5;
  verify->add_option("--max-n", verify_n, "largest length on the count grid")->capture_default_str();
  verify->add_option("--max-m", verify_m, "largest run on the count grid")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*tables) {
      const auto id = parse_table_id(table_id);
      if (!id) throw UsageError("unknown table '" + table_id + "'");
      const Table t = make_table(*id);
      with_output(out, false, [&](std::ostream& os) { write_csv(os, t, precision); });
    } else if (*figure) {
      const Table t = figure1_table(a_list, n_min, n_max, parse_boundary(boundary));
      with_output(out, false, [&](std::ostream& os) { write_csv(os, t, precision); });
    } else if (*count) {
      const unsigned m = parse_run(m_text);
      if (profile) {
        if (q != 2 && q != 4) throw UsageError("weight profiles need --q 2 or --q 4");
        std::vector<BigCount> counts;
        if (method == "oracle") {
          counts = oracle::brute_weight_profile(q, m, n);
        } else {
          counts = weight_profile(q == 2 ? Alphabet::binary : Alphabet::quaternary, m, n).counts;
        }
        std::cout << "w,count\n";
        for (unsigned w = 0; w <= n; ++w) std::cout << w << ',' << to_decimal(counts[w]) << '\n';
      } else {
        BigCount c;
        if (method == "recurrence") {
          c = rll_count(q, m, n);
        } else if (method == "gf") {
          c = rll_count_gf(q, m, n);
        } else if (method == "transfer") {
          if (q != 2 && q != 4) throw UsageError("--method transfer needs --q 2 or --q 4");
          c = weight_profile(q == 2 ? Alphabet::binary : Alphabet::quaternary, m, n).total();
        } else if (method == "oracle") {
          c = oracle::brute_rll_count(q, m, n);
        } else {
          throw UsageError("unknown method '" + method + "'");
        }
        std::cout << to_decimal(c) << '\n';
      }
    } else if (*cap) {
      const auto r = capacity(q, parse_run(m_text));
      std::cout << "lambda," << format_fixed(r.lambda, precision) << "\ncapacity," << format_fixed(r.capacity_bits, precision)
                << '\n';
    } else if (*red) {
      const unsigned m = parse_run(m_text);
      const Estimate mode = asymptotic ? Estimate::asymptotic : Estimate::exact;
      double r = 0;
      if (a_bound) {
        if (q != 2 && q != 4) throw UsageError("--a needs --q 2 or --q 4");
        r = combined_redundancy(q == 2 ? Alphabet::binary : Alphabet::quaternary, m, *a_bound, n, mode,
                                parse_boundary(boundary));
      } else {
        r = rll_redundancy(q, m, n, mode);
      }
      std::cout << format_fixed(r, precision) << '\n';
    } else if (*enc) {
      const auto codec = codec_from(enc_opts);
      const auto records = encode_payload(*codec, read_bytes(enc_opts.in));
      with_output(enc_opts.out, false, [&](std::ostream& os) { write_records(os, records); });
    } else if (*dec) {
      const auto codec = codec_from(dec_opts);
      std::vector<std::string> records;
      if (dec_opts.in.empty() || dec_opts.in == "-") {
        records = read_records(std::cin);
      } else {
        std::ifstream file(dec_opts.in);
        if (!file) throw DataError("cannot read " + dec_opts.in);
        records = read_records(file);
      }
      const auto bytes = decode_strands(*codec, records);
      with_output(dec_opts.out, true, [&](std::ostream& os) {
        os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
      });
    } else if (*verify) {
      return run_verify(std::cout, verify_n, verify_m) ? 0 : kExitData;
    }
  } catch (const DecodeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
