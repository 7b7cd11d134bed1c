#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "tgraph/core.hpp"

using namespace tgraph;

TEST_CASE("canonical fixture matches the example graph") {
  auto contacts = canonical_fixture();
  REQUIRE(contacts.size() == 7);
  REQUIRE(std::count(contacts.begin(), contacts.end(),
                     Contact{0, 1, 1, 3}) == 1);  // (a,b)
  REQUIRE(std::count(contacts.begin(), contacts.end(),
                     Contact{3, 1, 0, 6}) == 1);  // (d,b)
  REQUIRE_NOTHROW(validate(contacts, kFixtureVertexCount, kFixtureLifetime));
}

TEST_CASE("validate checks ranges and durations") {
  REQUIRE(validate({}, 0, 0).empty());
  REQUIRE(validate(canonical_fixture(), 5, 7).size() == 7);

  REQUIRE_THROWS_AS(validate({{0, 1, 3, 3}}, 2, 5), ValidationError);
  REQUIRE_THROWS_AS(validate({{0, 1, 3, 1}}, 2, 5), ValidationError);
  REQUIRE_THROWS_AS(validate({{2, 1, 0, 1}}, 2, 5), ValidationError);
  REQUIRE_THROWS_AS(validate({{0, 2, 0, 1}}, 2, 5), ValidationError);
  REQUIRE_THROWS_AS(validate({{0, 1, 0, 5}}, 2, 5), ValidationError);

  SECTION("duplicates collapse") {
    auto got = validate({{0, 1, 1, 3}, {0, 1, 1, 3}}, 2, 5);
    REQUIRE(got.size() == 1);
  }
  SECTION("same-edge overlap is rejected, touching is fine") {
    REQUIRE_THROWS_AS(validate({{0, 1, 1, 3}, {0, 1, 2, 4}}, 2, 5),
                      ValidationError);
    REQUIRE(validate({{0, 1, 1, 3}, {0, 1, 3, 4}}, 2, 5).size() == 2);
  }
  SECTION("input order does not matter") {
    auto shuffled = canonical_fixture();
    std::mt19937_64 rng(7);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(validate(shuffled, 5, 7) == validate(canonical_fixture(), 5, 7));
  }
}

TEST_CASE("contact matching under the three semantics") {
  Contact c{0, 1, 1, 3};  // active at 1 and 2
  REQUIRE(contact_matches(c, QueryInterval::point(1)));
  REQUIRE(contact_matches(c, QueryInterval::point(2)));
  REQUIRE_FALSE(contact_matches(c, QueryInterval::point(3)));
  REQUIRE(contact_matches(c, QueryInterval::weak(2, 4)));
  REQUIRE_FALSE(contact_matches(c, QueryInterval::weak(3, 4)));
  REQUIRE(contact_matches(c, QueryInterval::strong(1, 2)));
  REQUIRE_FALSE(contact_matches(c, QueryInterval::strong(1, 3)));
  REQUIRE_FALSE(contact_matches(c, QueryInterval::strong(0, 2)));
}
