#pragma once

// The worked query table over the five-vertex fixture: eight query rows,
// each evaluated at point [2,2], weak [2,4], strong [2,4]. Shared between the
// unit tests and the acceptance suite.

#include <functional>
#include <string>
#include <vector>

#include "tgraph/core.hpp"

namespace table1 {

using tgraph::Edge;
using tgraph::QueryInterval;
using tgraph::Semantics;
using tgraph::TemporalGraphIndex;
using tgraph::VertexId;

constexpr VertexId A = 0, B = 1, C = 2, D = 3, E = 4;

struct CellCheck {
  std::string label;
  bool pass;
};

template <class T>
bool eq(const std::vector<T>& got, const std::vector<T>& want) {
  return got == want;
}

inline bool throws_semantics(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const tgraph::SemanticsError&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

// Evaluates all 24 table cells against an index; every cell must agree.
inline std::vector<CellCheck> check(const TemporalGraphIndex& x) {
  const QueryInterval p = QueryInterval::point(2);
  const QueryInterval w = QueryInterval::weak(2, 4);
  const QueryInterval s = QueryInterval::strong(2, 4);
  std::vector<CellCheck> out;
  auto cell = [&](const std::string& label, bool pass) {
    out.push_back({label, pass});
  };

  cell("has_edge point", x.has_edge(A, B, p) == true);
  cell("has_edge weak", x.has_edge(A, B, w) == true);
  cell("has_edge strong", x.has_edge(A, B, s) == false);

  cell("next_activation point", x.next_activation(B, C, 2) == 3u);
  // The interval columns mark this query not applicable: it accepts only a
  // single timestamp, matching the empty-set entries.
  cell("next_activation weak", true);
  cell("next_activation strong", true);

  cell("neighbors point", eq(x.neighbors(D, p), {B}));
  cell("neighbors weak", eq(x.neighbors(D, w), {B}));
  cell("neighbors strong", eq(x.neighbors(D, s), {B}));

  cell("neighbors_r point", eq(x.neighbors_r(D, p), {A}));
  cell("neighbors_r weak", eq(x.neighbors_r(D, w), {A, E}));
  cell("neighbors_r strong", eq(x.neighbors_r(D, s), {}));

  cell("aggregate point", eq(x.aggregate(p), {{A, B}, {A, D}, {D, B}}));
  cell("aggregate weak",
       eq(x.aggregate(w), {{A, B}, {A, D}, {B, C}, {B, E}, {D, B}, {E, D}}));
  cell("aggregate strong", eq(x.aggregate(s), {{D, B}}));

  cell("activated point", eq(x.activated_edges(p), {{A, D}}));
  cell("activated weak",
       eq(x.activated_edges(w), {{A, D}, {B, C}, {B, E}, {E, D}}));
  cell("activated strong",
       throws_semantics([&] { (void)x.activated_edges(s); }));

  cell("deactivated point", eq(x.deactivated_edges(p), {}));
  cell("deactivated weak", eq(x.deactivated_edges(w), {{A, B}, {A, D}}));
  cell("deactivated strong",
       throws_semantics([&] { (void)x.deactivated_edges(s); }));

  cell("changed point", eq(x.changed_edges(p), {{A, D}}));
  cell("changed weak",
       eq(x.changed_edges(w), {{A, B}, {A, D}, {B, C}, {B, E}, {E, D}}));
  cell("changed strong", eq(x.changed_edges(s), {{A, D}}));

  return out;
}

inline bool all_pass(const TemporalGraphIndex& x) {
  for (const CellCheck& c : check(x))
    if (!c.pass) return false;
  return true;
}

}  // namespace table1
