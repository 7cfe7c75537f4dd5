#include <doctest.h>

#include <clocale>
#include <locale>
#include <sstream>

#include "dnacode/tables.hpp"

using namespace dnacode;

namespace {

std::string csv(const Table& t, int precision = 4) {
  std::ostringstream out;
  write_csv(out, t, precision);
  return out.str();
}

const TableRow& row(const Table& t, const std::string& label) {
  for (const auto& r : t.rows) {
    if (r.label == label) return r;
  }
  throw std::out_of_range(label);
}

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("table ids") {
  for (const auto& name : table_names()) {
    const auto id = parse_table_id(name);
    REQUIRE(id);
    CHECK(table_name(*id) == name);
  }
  CHECK_FALSE(parse_table_id("table7"));
}

TEST_CASE("rendered rows") {
  const std::string cap = csv(make_table(TableId::capacity));
  CHECK(cap.rfind("m,C2,C4\n", 0) == 0);
  CHECK(cap.find("\n3,0.8791,1.9824\n") != std::string::npos);
  const std::string gamma = csv(make_table(TableId::gamma));
  CHECK(gamma.find("\n1,,0.5000\n") != std::string::npos);
  CHECK(gamma.find("\n5,0.6426,0.9808\n") != std::string::npos);
  CHECK(gamma.find("\ninf,1.0000,1.0000\n") != std::string::npos);
  CHECK(csv(make_table(TableId::eta), 3).find("\n5,0.988\n") != std::string::npos);
  CHECK(csv(make_table(TableId::coefficient)).find("\n1,,1.3333\n") != std::string::npos);
}

TEST_CASE("every table has one value per header column") {
  for (const auto& name : table_names()) {
    const Table t = make_table(*parse_table_id(name));
    for (const auto& r : t.rows) CHECK(r.values.size() + 1 == t.header.size());
  }
}

TEST_CASE("efficiency rows for strand length 5") {
  CHECK(row(make_table(TableId::two_mode), "5").values[1].value() == doctest::Approx(0.807).epsilon(6e-4));
  CHECK(row(make_table(TableId::state_independent), "5").values[2].value() == doctest::Approx(0.807).epsilon(6e-4));
  CHECK(row(make_table(TableId::state_dependent), "5").values[2].value() == doctest::Approx(0.908).epsilon(6e-4));
}

TEST_CASE("output does not depend on the global locale") {
  const std::string before = csv(make_table(TableId::capacity));
  for (const char* name : {"de_DE.UTF-8", "fr_FR.UTF-8", "C.UTF-8"}) {
    try {
      const std::locale previous = std::locale::global(std::locale(name));
      std::setlocale(LC_ALL, name);
      const std::string during = csv(make_table(TableId::capacity));
      std::locale::global(previous);
      std::setlocale(LC_ALL, "C");
      CHECK(during == before);
    } catch (const std::runtime_error&) {
      // locale not installed
    }
  }
}

TEST_CASE("figure data") {
  const Table t = figure1_table({0.2}, 4, 4);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.header == std::vector<std::string>{"n", "a", "r"});
  CHECK(t.rows[0].values[1].value() == doctest::Approx(1.415).epsilon(1e-3));
  CHECK(csv(figure1_table({0.05, 0.1}, 10, 60)) == csv(figure1_table({0.05, 0.1}, 10, 60)));
  CHECK(figure1_table({0.05, 0.1, 0.15}, 10, 200).rows.size() == 3 * 191);
}

TEST_CASE("redundancy vanishes past one half") {
  const Table t = figure1_table({0.5 + 1e-9}, 1, 60);
  for (const auto& r : t.rows) CHECK(r.values[1].value() == doctest::Approx(0.0));
}

TEST_CASE("redundancy curve is ragged for small lengths and falls on average") {
  const Table t = figure1_table({0.05}, 10, 100);
  int sign_changes = 0;
  double previous_step = 0.0;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const double step = *t.rows[i].values[1] - *t.rows[i - 1].values[1];
    if (step * previous_step < 0.0) ++sign_changes;
    if (step != 0.0) previous_step = step;
  }
  CHECK(sign_changes > 0);
  // Mean over the first and the last quarter of n in [50, 400].
  const Table wide = figure1_table({0.05}, 50, 400);
  double head = 0.0, tail = 0.0;
  const std::size_t quarter = wide.rows.size() / 4;
  for (std::size_t i = 0; i < quarter; ++i) {
    head += *wide.rows[i].values[1];
    tail += *wide.rows[wide.rows.size() - 1 - i].values[1];
  }
  CHECK(tail < head);
}

TEST_CASE("fixed formatting") {
  CHECK(format_fixed(1.23456, 4) == "1.2346");
  CHECK(format_fixed(0.0, 2) == "0.00");
  CHECK(format_fixed(-0.5, 1) == "-0.5");
}

}
