#include "dnacode/tables.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <utility>

#include "dnacode/asymptotics.hpp"
#include "dnacode/counting.hpp"
#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

constexpr std::array<std::pair<TableId, const char*>, 7> kNames{{
    {TableId::capacity, "capacity"},
    {TableId::coefficient, "coefficient"},
    {TableId::eta, "eta"},
    {TableId::two_mode, "two-mode"},
    {TableId::state_independent, "state-indep"},
    {TableId::state_dependent, "state-dep"},
    {TableId::gamma, "gamma"},
}};

unsigned floor_log2_count(const BigCount& value) {
  return static_cast<unsigned>(boost::multiprecision::msb(value));
}

using RateFn = double (*)(unsigned m, unsigned n);

double two_mode_rate(unsigned m, unsigned n) {
  return (n - 1.0 + floor_log2_count(rll_count(2, m, n))) / n;
}

double state_independent_rate(unsigned m, unsigned n) {
  return (floor_log2_count(rll_count(4, m, n)) - 1.0) / n;
}

double state_dependent_rate(unsigned m, unsigned n) {
  return static_cast<double>(floor_log2_count(3 * rll_count(4, m, n) / 4)) / n;
}

Table efficiency_table(RateFn rate, std::vector<unsigned> ms) {
  Table t;
  t.header.push_back("n");
  for (unsigned m : ms) t.header.push_back("m=" + std::to_string(m));
  for (unsigned n = 5; n <= 10; ++n) {
    TableRow row{std::to_string(n), {}};
    for (unsigned m : ms) row.values.push_back(rate(m, n) / capacity(4, m).capacity_bits);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

std::optional<TableId> parse_table_id(const std::string& name) {
  for (const auto& [id, text] : kNames) {
    if (name == text) return id;
  }
  return std::nullopt;
}

std::string table_name(TableId id) {
  for (const auto& [key, text] : kNames) {
    if (key == id) return text;
  }
  return "unknown";
}

std::vector<std::string> table_names() {
  std::vector<std::string> out;
  for (const auto& entry : kNames) out.emplace_back(entry.second);
  return out;
}

Table make_table(TableId id) {
  Table t;
  switch (id) {
    case TableId::capacity:
      t.header = {"m", "C2", "C4"};
      for (unsigned m = 1; m <= 6; ++m) {
        t.rows.push_back({std::to_string(m), {capacity(2, m).capacity_bits, capacity(4, m).capacity_bits}});
      }
      break;
    case TableId::coefficient:
      t.header = {"m", "A2", "A4"};
      for (unsigned m = 1; m <= 6; ++m) {
        std::optional<double> a2;
        if (m > 1) a2 = leading_coefficient(2, m);
        t.rows.push_back({std::to_string(m), {a2, leading_coefficient(4, m)}});
      }
      break;
    case TableId::eta:
      t.header = {"m", "eta"};
      for (unsigned m = 2; m <= 7; ++m) t.rows.push_back({std::to_string(m), {efficiency_eta(m)}});
      break;
    case TableId::two_mode:
      return efficiency_table(two_mode_rate, {2, 3, 4});
    case TableId::state_independent:
      return efficiency_table(state_independent_rate, {1, 2, 3, 4});
    case TableId::state_dependent:
      return efficiency_table(state_dependent_rate, {1, 2, 3, 4});
    case TableId::gamma:
      t.header = {"m", "gamma2", "gamma4"};
      for (unsigned m : {1u, 2u, 3u, 4u, 5u, 10u, kNoRunLimit}) {
        std::optional<double> g2;
        if (m > 1) g2 = gamma_binary(m);
        const double g4 = m == kNoRunLimit ? 1.0 : gamma_quaternary(m);
        t.rows.push_back({m == kNoRunLimit ? std::string("inf") : std::to_string(m), {g2, g4}});
      }
      break;
  }
  return t;
}

Table figure1_table(const std::vector<double>& a_list, unsigned n_min, unsigned n_max, BoundaryMode mode) {
  if (n_min < 1 || n_min > n_max) throw DomainError("length range must satisfy 1 <= n_min <= n_max");
  Table t;
  t.header = {"n", "a", "r"};
  for (double a : a_list) {
    for (unsigned n = n_min; n <= n_max; ++n) {
      t.rows.push_back({std::to_string(n), {a, balance_redundancy(n, a, mode)}});
    }
  }
  return t;
}

std::string format_fixed(double value, int precision) {
  std::array<char, 512> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, precision);
  if (res.ec != std::errc{}) throw NumericError("value does not fit the output buffer");
  return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& out, const Table& table, int precision) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    out << row.label;
    for (const auto& v : row.values) {
      out << ',';
      if (v) out << format_fixed(*v, precision);
    }
    out << '\n';
  }
}

}  // namespace dnacode
