#pragma once

// Oracle-equivalence driver: runs all eight queries on a structure and the
// brute-force oracle and counts disagreements.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tgraph/core.hpp"

namespace equivalence {

using tgraph::QueryInterval;
using tgraph::Semantics;
using tgraph::TemporalGraphIndex;
using tgraph::VertexId;

struct Report {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;

  void note(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++mismatches;
      if (first_mismatch.empty()) first_mismatch = what;
    }
  }
};

inline std::string describe(const QueryInterval& q) {
  std::ostringstream os;
  os << '[' << q.t_begin << ',' << q.t_end << ' ' << to_string(q.semantics)
     << ']';
  return os.str();
}

// Weak-or-point queries must agree; strong activated/deactivated must raise
// SemanticsError on both sides.
template <class FnA, class FnB>
bool same_outcome(FnA&& oracle_fn, FnB&& index_fn) {
  bool oracle_threw = false, index_threw = false;
  decltype(oracle_fn()) oracle_result{}, index_result{};
  try {
    oracle_result = oracle_fn();
  } catch (const tgraph::SemanticsError&) {
    oracle_threw = true;
  }
  try {
    index_result = index_fn();
  } catch (const tgraph::SemanticsError&) {
    index_threw = true;
  }
  if (oracle_threw || index_threw)
    return oracle_threw == index_threw;
  return oracle_result == index_result;
}

inline void compare_interval(const TemporalGraphIndex& oracle,
                             const TemporalGraphIndex& x,
                             const QueryInterval& q, Report& report,
                             bool exhaustive_pairs = true) {
  const std::uint32_t n = oracle.vertex_count();
  const std::string where = std::string(x.name()) + " " + describe(q);

  if (exhaustive_pairs) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        report.note(oracle.has_edge(u, v, q) == x.has_edge(u, v, q),
                    where + " has_edge " + std::to_string(u) + "," +
                        std::to_string(v));
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        report.note(oracle.next_activation(u, v, q.t_begin) ==
                        x.next_activation(u, v, q.t_begin),
                    where + " next_activation " + std::to_string(u) + "," +
                        std::to_string(v));
  }
  for (VertexId u = 0; u < n; ++u)
    report.note(oracle.neighbors(u, q) == x.neighbors(u, q),
                where + " neighbors " + std::to_string(u));
  for (VertexId v = 0; v < n; ++v)
    report.note(oracle.neighbors_r(v, q) == x.neighbors_r(v, q),
                where + " neighbors_r " + std::to_string(v));
  report.note(oracle.aggregate(q) == x.aggregate(q), where + " aggregate");
  report.note(same_outcome([&] { return oracle.activated_edges(q); },
                           [&] { return x.activated_edges(q); }),
              where + " activated_edges");
  report.note(same_outcome([&] { return oracle.deactivated_edges(q); },
                           [&] { return x.deactivated_edges(q); }),
              where + " deactivated_edges");
  report.note(oracle.changed_edges(q) == x.changed_edges(q),
              where + " changed_edges");
}

// Every interval at every semantics, exhaustively.
inline std::vector<QueryInterval> all_intervals(std::uint32_t tau) {
  std::vector<QueryInterval> out;
  for (std::uint32_t b = 0; b < tau; ++b) {
    out.push_back(QueryInterval::point(b));
    for (std::uint32_t e = b; e < tau; ++e) {
      out.push_back(QueryInterval::weak(b, e));
      out.push_back(QueryInterval::strong(b, e));
    }
  }
  return out;
}

}  // namespace equivalence
