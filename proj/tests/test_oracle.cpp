#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/naive.hpp"
#include "support/table1.hpp"
#include "tgraph/oracle.hpp"

using namespace tgraph;
using table1::A;
using table1::B;
using table1::C;
using table1::D;
using table1::E;

namespace {

OracleIndex fixture_oracle() {
  return OracleIndex(canonical_fixture(), kFixtureVertexCount,
                     kFixtureLifetime);
}

}  // namespace

TEST_CASE("oracle reproduces the full worked query table") {
  OracleIndex x = fixture_oracle();
  for (const auto& cell : table1::check(x)) {
    INFO(cell.label);
    CHECK(cell.pass);
  }
}

TEST_CASE("oracle edge queries beyond the table") {
  OracleIndex x = fixture_oracle();
  REQUIRE(x.has_edge(D, B, QueryInterval::strong(2, 4)));
  REQUIRE(x.next_activation(A, B, 2) == std::nullopt);
  REQUIRE(x.next_activation(A, D, 4) == 4u);
  REQUIRE(x.next_activation(A, D, 3) == 4u);
  REQUIRE(x.neighbors(A, QueryInterval::point(2)) ==
          std::vector<VertexId>{B, D});
  REQUIRE(x.neighbors(C, QueryInterval::weak(0, 6)).empty());
  REQUIRE(x.deactivated_edges(QueryInterval::weak(0, 6)).size() == 6);
}

TEST_CASE("oracle validates query arguments") {
  OracleIndex x = fixture_oracle();
  REQUIRE_THROWS_AS(x.has_edge(9, 0, QueryInterval::point(0)), RangeError);
  REQUIRE_THROWS_AS(x.has_edge(0, 9, QueryInterval::point(0)), RangeError);
  REQUIRE_THROWS_AS(x.has_edge(0, 1, QueryInterval::point(7)), RangeError);
  REQUIRE_THROWS_AS(x.has_edge(0, 1, QueryInterval::weak(4, 2)), RangeError);
  REQUIRE_THROWS_AS(x.next_activation(0, 1, 7), RangeError);
  REQUIRE_THROWS_AS(x.neighbors(5, QueryInterval::point(0)), RangeError);
  REQUIRE_THROWS_AS(x.activated_edges(QueryInterval::strong(1, 2)),
                    SemanticsError);
  REQUIRE_THROWS_AS(x.deactivated_edges(QueryInterval::strong(1, 2)),
                    SemanticsError);
  REQUIRE_NOTHROW(x.changed_edges(QueryInterval::strong(1, 2)));
}

TEST_CASE("oracle interval-semantics identities") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 25; ++iter) {
    std::uint32_t n = 2 + rng() % 7;
    std::uint32_t tau = 2 + rng() % 7;
    OracleIndex x(naive::random_contacts(n, tau, 30, rng), n, tau);

    for (std::uint32_t t = 0; t < tau; ++t) {
      QueryInterval point = QueryInterval::point(t);
      QueryInterval weak = QueryInterval::weak(t, t);
      QueryInterval strong = QueryInterval::strong(t, t);
      REQUIRE(x.aggregate(point) == x.aggregate(weak));
      REQUIRE(x.aggregate(point) == x.aggregate(strong));
    }
    for (std::uint32_t b = 0; b < tau; ++b)
      for (std::uint32_t e = b; e < tau; ++e) {
        QueryInterval weak = QueryInterval::weak(b, e);
        QueryInterval strong = QueryInterval::strong(b, e);

        auto agg = x.aggregate(weak);
        std::vector<Edge> via_neighbors;
        for (VertexId u = 0; u < n; ++u)
          for (VertexId v : x.neighbors(u, weak))
            via_neighbors.emplace_back(u, v);
        REQUIRE(agg == via_neighbors);

        std::vector<Edge> via_reverse;
        for (VertexId v = 0; v < n; ++v)
          for (VertexId u : x.neighbors_r(v, weak))
            via_reverse.emplace_back(u, v);
        std::sort(via_reverse.begin(), via_reverse.end());
        REQUIRE(agg == via_reverse);

        // Strong results are contained in weak results.
        auto strong_agg = x.aggregate(strong);
        REQUIRE(std::includes(agg.begin(), agg.end(), strong_agg.begin(),
                              strong_agg.end()));

        // Weak changed = activated union deactivated.
        auto act = x.activated_edges(weak);
        auto deact = x.deactivated_edges(weak);
        std::vector<Edge> both;
        std::set_union(act.begin(), act.end(), deact.begin(), deact.end(),
                       std::back_inserter(both));
        REQUIRE(x.changed_edges(weak) == both);
      }

    // next_activation lands on a real activation at or after t.
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        for (std::uint32_t t = 0; t < tau; ++t) {
          auto r = x.next_activation(u, v, t);
          if (!r) continue;
          REQUIRE(*r >= t);
          bool found = false;
          for (const Contact& c : x.contacts())
            found |= c.u == u && c.v == v && c.t_begin == *r;
          REQUIRE(found);
        }
  }
}
