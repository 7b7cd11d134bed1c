#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tgraph/codecs.hpp"

using namespace tgraph;

TEST_CASE("delta-gap transform") {
  DeltaStream s = deltagap_encode(std::vector<std::uint64_t>{1, 3, 7});
  REQUIRE(s.first == 1u);
  REQUIRE(s.gaps == std::vector<std::uint64_t>{2, 4});

  DeltaStream single = deltagap_encode(std::vector<std::uint64_t>{5});
  REQUIRE(single.first == 5u);
  REQUIRE(single.gaps.empty());

  REQUIRE(deltagap_encode(std::vector<std::uint64_t>{}).empty());
  REQUIRE(deltagap_decode(DeltaStream{}).empty());

  REQUIRE_THROWS_AS(deltagap_encode(std::vector<std::uint64_t>{3, 3}),
                    EncodingError);
  REQUIRE_THROWS_AS(deltagap_encode(std::vector<std::uint64_t>{3, 2}),
                    EncodingError);
}

TEST_CASE("delta-gap round-trips random sorted lists") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t len = rng() % 40;
    std::vector<std::uint64_t> values;
    std::uint64_t cur = rng() % 100;
    for (std::size_t k = 0; k < len; ++k) {
      values.push_back(cur);
      cur += 1 + rng() % 50;
    }
    DeltaStream s = deltagap_encode(values);
    for (std::uint64_t g : s.gaps) REQUIRE(g >= 1);
    REQUIRE(deltagap_decode(s) == values);

    std::vector<std::uint8_t> bytes;
    deltagap_append(values, bytes);
    std::size_t pos = 0;
    REQUIRE(deltagap_read(bytes, pos) == values);
    REQUIRE(pos == bytes.size());
  }
}

TEST_CASE("non-decreasing lists round-trip through the index skew") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t len = rng() % 30;
    std::vector<std::uint64_t> values;
    std::uint64_t cur = rng() % 5;
    for (std::size_t k = 0; k < len; ++k) {
      values.push_back(cur);
      cur += rng() % 3;  // repeats allowed
    }
    std::vector<std::uint8_t> bytes;
    nondecreasing_append(values, bytes);
    std::size_t pos = 0;
    REQUIRE(nondecreasing_read(bytes, pos) == values);
  }
}

TEST_CASE("varint boundaries") {
  REQUIRE(vint_encode(0).size() == 1);
  REQUIRE(vint_encode(127).size() == 1);
  REQUIRE(vint_encode(128).size() == 2);
  REQUIRE(vint_encode((1u << 14) - 1).size() == 2);
  REQUIRE(vint_encode(1u << 14).size() == 3);

  std::vector<std::uint8_t> truncated{0x80};
  REQUIRE_THROWS_AS(vint_decode(truncated), DecodingError);
}

TEST_CASE("varint round-trips") {
  // Exhaustive over the low range; mismatches counted to keep the loop hot.
  std::uint64_t mismatches = 0;
  std::vector<std::uint8_t> buf;
  for (std::uint64_t v = 0; v < (1u << 20); ++v) {
    buf.clear();
    vint_append(v, buf);
    std::size_t pos = 0;
    if (vint_read(buf, pos) != v || pos != buf.size()) ++mismatches;
  }
  REQUIRE(mismatches == 0);
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 1000; ++iter) {
    std::uint64_t v = rng();
    REQUIRE(vint_decode(vint_encode(v)) == v);
  }
}

TEST_CASE("ETDC dense code assignment") {
  SECTION("single symbol") {
    auto dict = EtdcDictionary::build({{7, 3}});
    std::vector<std::uint8_t> out;
    dict.encode(7, out);
    REQUIRE(out.size() == 1);
    std::size_t pos = 0;
    REQUIRE(dict.decode(out, pos) == 7);
  }
  SECTION("most frequent 128 of 200 symbols take one byte") {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> freq;
    for (std::uint32_t s = 0; s < 200; ++s) freq.emplace_back(s, 1000 - s);
    auto dict = EtdcDictionary::build(freq);
    for (std::uint32_t s = 0; s < 200; ++s)
      REQUIRE(dict.code_length(s) == (s < 128 ? 1u : 2u));
  }
  SECTION("unknown symbol") {
    auto dict = EtdcDictionary::build({{1, 5}});
    std::vector<std::uint8_t> out;
    REQUIRE_THROWS_AS(dict.encode(2, out), UnknownSymbolError);
  }
  SECTION("empty table") {
    REQUIRE_THROWS_AS(EtdcDictionary::build({}), ValidationError);
  }
}

TEST_CASE("ETDC monotone lengths and stream round-trip") {
  std::mt19937_64 rng(14);
  for (int iter = 0; iter < 100; ++iter) {
    std::uint32_t sigma = 1 + rng() % 300;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> freq;
    for (std::uint32_t s = 0; s < sigma; ++s) freq.emplace_back(s, rng() % 50);
    auto dict = EtdcDictionary::build(freq);
    // Lengths grow along the frequency ranking, which orders by count.
    std::uint64_t violations = 0;
    const auto& ranked = dict.rank_to_symbol();
    for (std::size_t k = 1; k < ranked.size(); ++k)
      if (dict.code_length(ranked[k - 1]) > dict.code_length(ranked[k]))
        ++violations;
    REQUIRE(violations == 0);

    std::vector<std::uint32_t> stream;
    for (int k = 0; k < 200; ++k) stream.push_back(rng() % sigma);
    std::vector<std::uint8_t> bytes;
    for (std::uint32_t s : stream) dict.encode(s, bytes);
    std::size_t pos = 0;
    std::uint64_t bad = 0;
    for (std::uint32_t s : stream) bad += dict.decode(bytes, pos) != s;
    REQUIRE(bad == 0);
    REQUIRE(pos == bytes.size());
  }
}
