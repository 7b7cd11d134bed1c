#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/naive.hpp"
#include "support/table1.hpp"
#include "tgraph/evelog.hpp"
#include "tgraph/oracle.hpp"

using namespace tgraph;
using table1::A;
using table1::B;
using table1::C;
using table1::D;
using table1::E;

TEST_CASE("evelog event lists match the worked figure") {
  EveLogIndex x(canonical_fixture(), 5, 7);

  auto ea = x.events(A);
  REQUIRE(ea.targets == std::vector<std::uint32_t>{B, D, B, D, D, D});
  REQUIRE(ea.times == std::vector<Timestamp>{1, 2, 3, 3, 4, 6});

  REQUIRE(x.events(C).targets.empty());

  auto ed = x.events(D);
  REQUIRE(ed.targets == std::vector<std::uint32_t>{B, B});
  REQUIRE(ed.times == std::vector<Timestamp>{0, 6});

  auto eb = x.events(B);
  REQUIRE(eb.targets == std::vector<std::uint32_t>{C, E, E, C});
  REQUIRE(eb.times == std::vector<Timestamp>{3, 3, 5, 6});
}

TEST_CASE("evelog per-edge event parity is even over the lifetime") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 30; ++iter) {
    std::uint32_t n = 2 + rng() % 7, tau = 3 + rng() % 8;
    EveLogIndex x(naive::random_contacts(n, tau, 40, rng), n, tau);
    for (VertexId u = 0; u < n; ++u) {
      auto ev = x.events(u);
      std::vector<std::uint32_t> counts(n, 0);
      for (std::uint32_t v : ev.targets) counts[v]++;
      for (std::uint32_t c : counts) REQUIRE(c % 2 == 0);
      REQUIRE(std::is_sorted(ev.times.begin(), ev.times.end()));
      REQUIRE(ev.times.size() == ev.targets.size());
    }
  }
}

TEST_CASE("evelog reproduces the worked query table") {
  EveLogIndex x(canonical_fixture(), 5, 7);
  for (const auto& cell : table1::check(x)) {
    INFO(cell.label);
    CHECK(cell.pass);
  }
}

TEST_CASE("evelog half-open boundaries") {
  EveLogIndex x(canonical_fixture(), 5, 7);
  REQUIRE_FALSE(x.has_edge(D, B, QueryInterval::point(6)));
  REQUIRE(x.has_edge(D, B, QueryInterval::point(5)));
  REQUIRE(x.has_edge(E, D, QueryInterval::point(3)));
}

TEST_CASE("evelog parity reconstruction equals the oracle at every point") {
  OracleIndex oracle(canonical_fixture(), 5, 7);
  EveLogIndex x(canonical_fixture(), 5, 7);
  for (VertexId u = 0; u < 5; ++u)
    for (VertexId v = 0; v < 5; ++v)
      for (Timestamp t = 0; t < 7; ++t)
        REQUIRE(x.has_edge(u, v, QueryInterval::point(t)) ==
                oracle.has_edge(u, v, QueryInterval::point(t)));
}

TEST_CASE("evelog reverse twin matches the scan fallback") {
  std::mt19937_64 rng(62);
  for (int iter = 0; iter < 25; ++iter) {
    std::uint32_t n = 2 + rng() % 7, tau = 3 + rng() % 8;
    auto contacts = naive::random_contacts(n, tau, 40, rng);
    EveLogIndex plain(contacts, n, tau, false);
    EveLogIndex twin(contacts, n, tau, true);
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
