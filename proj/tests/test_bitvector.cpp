#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tgraph/bitvector.hpp"

using namespace tgraph;

TEST_CASE("bitvector rank and select on the worked example") {
  // B = 10110
  BitVector bv(std::vector<bool>{1, 0, 1, 1, 0});
  REQUIRE(bv.rank(1, 3) == 2);
  REQUIRE(bv.rank(0, 5) == 2);
  REQUIRE(bv.rank(1, 0) == 0);
  REQUIRE(bv.rank(0, 0) == 0);
  REQUIRE(bv.select(1, 2) == 3);
  REQUIRE(bv.select(0, 1) == 2);
  REQUIRE_THROWS_AS(bv.select(1, 4), NotFoundError);
  REQUIRE_THROWS_AS(bv.rank(1, 6), RangeError);
  REQUIRE_THROWS_AS(bv.get(0), RangeError);
}

TEST_CASE("bitvector agrees with naive scans") {
  std::mt19937_64 rng(21);
  std::uint64_t mismatches = 0;
  for (int iter = 0; iter < 40; ++iter) {
    std::uint64_t size = 1 + rng() % 3000;
    double density = (iter % 4) * 0.33;
    std::vector<bool> bits(size);
    for (std::uint64_t k = 0; k < size; ++k)
      bits[k] = (rng() % 100) < density * 100;
    BitVector bv(bits);

    std::uint64_t ones = 0;
    for (std::uint64_t i = 1; i <= size; ++i) {
      ones += bits[i - 1];
      if (bv.rank1(i) != ones) ++mismatches;
      if (bv.rank0(i) != i - ones) ++mismatches;
      if (bv.rank1(i) + bv.rank0(i) != i) ++mismatches;
    }
    std::uint64_t seen1 = 0, seen0 = 0;
    for (std::uint64_t i = 1; i <= size; ++i) {
      if (bits[i - 1]) {
        if (bv.select1(++seen1) != i) ++mismatches;
      } else {
        if (bv.select0(++seen0) != i) ++mismatches;
      }
    }
  }
  REQUIRE(mismatches == 0);
}

TEST_CASE("select inverts rank") {
  std::mt19937_64 rng(22);
  std::vector<bool> bits(777);
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = rng() & 1;
  BitVector bv(bits);
  for (std::uint64_t j = 1; j <= bits.size(); ++j) {
    bool b = bits[j - 1];
    REQUIRE(bv.select(b, bv.rank(b, j)) <= j);
    REQUIRE(bv.select(b, bv.rank(b, j)) == j);
  }
}
