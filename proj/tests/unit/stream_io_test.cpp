#include <doctest.h>

#include <random>
#include <sstream>

#include "dnacode/errors.hpp"
#include "dnacode/stream_io.hpp"

using namespace dnacode;

TEST_SUITE("stream_io") {

TEST_CASE("framing pads to the block size and records the pad") {
  const std::vector<std::uint8_t> bytes{0xA5, 0x01};
  for (std::size_t k : {1u, 3u, 7u, 9u, 24u, 256u}) {
    const auto bits = frame_payload(bytes, k);
    CHECK(bits.size() % k == 0);
    CHECK(bits[0] == 1);
    CHECK(bits[1] == 0);
    CHECK(unframe_payload(bits) == bytes);
  }
  CHECK(unframe_payload(frame_payload({}, 9)).empty());
  CHECK_THROWS_AS(frame_payload(bytes, 257), DomainError);
}

TEST_CASE("malformed trailers are rejected") {
  auto bits = frame_payload(std::vector<std::uint8_t>{0xFF}, 9);
  bits[8] = 1;  // a pad bit
  CHECK_THROWS_AS(unframe_payload(bits), ConstraintViolation);
  CHECK_THROWS_AS(unframe_payload(std::vector<std::uint8_t>(5, 0)), ConstraintViolation);
}

TEST_CASE("payload round trip through every codec") {
  std::mt19937 rng(3);
  std::vector<std::uint8_t> bytes(300);
  for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
  for (auto id : {CodecId::construction1_knuth, CodecId::construction1_weak_knuth, CodecId::construction2,
                  CodecId::state_independent, CodecId::state_dependent}) {
    const auto codec = make_codec(id, CodecParams{});
    const auto records = encode_payload(*codec, bytes);
    std::stringstream file;
    write_records(file, records);
    const auto back = read_records(file);
    CHECK(back == records);
    CHECK(decode_strands(*codec, back) == bytes);
  }
}

TEST_CASE("decode errors name the line") {
  const auto codec = make_codec(CodecId::state_dependent, {.m = 3, .n = 5});
  const std::vector<std::uint8_t> bytes{1, 2, 3, 4, 5, 6, 7, 8};
  auto records = encode_payload(*codec, bytes);
  REQUIRE(records.size() > 3);

  auto bad_letter = records;
  bad_letter[2][1] = 'U';
  try {
    decode_strands(*codec, bad_letter);
    FAIL("no exception");
  } catch (const DecodeError& e) {
    CHECK(e.line() == 3);
  }

  auto long_run = records;
  long_run[1] = "GGGGC";
  try {
    decode_strands(*codec, long_run);
    FAIL("no exception");
  } catch (const DecodeError& e) {
    CHECK(e.line() == 2);
  }

  // A run split across two records.
  auto split = records;
  split[0] = "ACGTG";
  split[1] = "GGCAT";
  CHECK_THROWS_AS(decode_strands(*codec, split), DecodeError);

  auto short_record = records;
  short_record[0].pop_back();
  CHECK_THROWS_AS(decode_strands(*codec, short_record), DecodeError);
}

TEST_CASE("blank lines and carriage returns are tolerated") {
  std::stringstream in("ACGTA\r\n\nCGTAC\n");
  const auto records = read_records(in);
  CHECK(records == std::vector<std::string>{"ACGTA", "", "CGTAC"});
}

}
