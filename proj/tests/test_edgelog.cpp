#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/naive.hpp"
#include "support/table1.hpp"
#include "tgraph/edgelog.hpp"
#include "tgraph/io.hpp"
#include "tgraph/oracle.hpp"

using namespace tgraph;
using table1::A;
using table1::B;
using table1::D;

TEST_CASE("edgelog stores sorted targets and interval lists") {
  EdgeLogIndex x(canonical_fixture(), 5, 7);
  REQUIRE(x.targets(A) == std::vector<std::uint32_t>{1, 3});
  REQUIRE(x.targets(2).empty());  // c
  REQUIRE(x.targets(D) == std::vector<std::uint32_t>{1});

  // (a,d) is the second edge of a's list; its intervals are [2,3],[4,6].
  auto intervals = x.intervals(1);
  REQUIRE(intervals ==
          std::vector<EdgeLogIndex::Interval>{{2, 3}, {4, 6}});

  SECTION("interval lists stay sorted and disjoint after decode") {
    std::mt19937_64 rng(51);
    for (int iter = 0; iter < 30; ++iter) {
      std::uint32_t n = 2 + rng() % 6, tau = 3 + rng() % 8;
      auto contacts = naive::random_contacts(n, tau, 40, rng);
      EdgeLogIndex idx(contacts, n, tau);
      std::uint64_t edges = 0;
      for (VertexId u = 0; u < n; ++u) edges += idx.targets(u).size();
      for (std::uint64_t e = 0; e < edges; ++e) {
        auto ivs = idx.intervals(e);
        for (std::size_t k = 0; k < ivs.size(); ++k) {
          REQUIRE(ivs[k].first < ivs[k].second);
          if (k > 0) REQUIRE(ivs[k - 1].second <= ivs[k].first);
        }
      }
    }
  }
}

TEST_CASE("edgelog empty graph") {
  EdgeLogIndex x({}, 4, 5);
  for (VertexId u = 0; u < 4; ++u) REQUIRE(x.targets(u).empty());
  REQUIRE(x.aggregate(QueryInterval::weak(0, 4)).empty());
}

TEST_CASE("edgelog reproduces the worked query table") {
  for (bool reverse : {false, true}) {
    EdgeLogIndex x(canonical_fixture(), 5, 7, reverse);
    for (const auto& cell : table1::check(x)) {
      INFO(cell.label << " with_reverse=" << reverse);
      CHECK(cell.pass);
    }
  }
}

TEST_CASE("edgelog point lookups") {
  EdgeLogIndex x(canonical_fixture(), 5, 7);
  REQUIRE(x.next_activation(A, D, 3) == 4u);
  REQUIRE(x.aggregate(QueryInterval::point(0)) == std::vector<Edge>{{D, B}});
  REQUIRE(x.activated_edges(QueryInterval::weak(2, 4)) ==
          std::vector<Edge>{{0, 3}, {1, 2}, {1, 4}, {4, 3}});
}

TEST_CASE("edgelog reverse twin agrees with the scan fallback") {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 60; ++iter) {
    std::uint32_t n = 2 + rng() % 8, tau = 3 + rng() % 8;
    auto contacts = naive::random_contacts(n, tau, 50, rng);
    EdgeLogIndex plain(contacts, n, tau, false);
    EdgeLogIndex twin(contacts, n, tau, true);
    REQUIRE_FALSE(plain.has_reverse());
    REQUIRE(twin.has_reverse());
    for (std::uint32_t b = 0; b < tau; ++b)
      for (std::uint32_t e = b; e < tau; ++e)
        for (VertexId v = 0; v < n; ++v) {
          REQUIRE(plain.neighbors_r(v, QueryInterval::weak(b, e)) ==
                  twin.neighbors_r(v, QueryInterval::weak(b, e)));
          REQUIRE(plain.neighbors_r(v, QueryInterval::strong(b, e)) ==
                  twin.neighbors_r(v, QueryInterval::strong(b, e)));
        }
  }
}

TEST_CASE("edgelog reverse twin doubles the space") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 10; ++iter) {
    std::uint32_t n = 12, tau = 24;
    auto contacts = naive::random_contacts(n, tau, 400, rng);
    if (contacts.size() < 100) continue;
    EdgeLogIndex plain(contacts, n, tau, false);
    EdgeLogIndex twin(contacts, n, tau, true);
    double ratio = static_cast<double>(twin.space_bits()) /
                   static_cast<double>(plain.space_bits());
    REQUIRE(ratio >= 1.8);
    REQUIRE(ratio <= 2.2);
  }
}

TEST_CASE("edgelog builds are deterministic") {
  auto shuffled = canonical_fixture();
  std::mt19937_64 rng(54);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EdgeLogIndex a(canonical_fixture(), 5, 7);
  EdgeLogIndex b(shuffled, 5, 7);
  REQUIRE(IndexCodec::save(a) == IndexCodec::save(b));
}
