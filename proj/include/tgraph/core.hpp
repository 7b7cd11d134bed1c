#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tgraph {

using VertexId = std::uint32_t;
using Timestamp = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// One activation interval of a directed edge: (u, v) is active on the
// half-open interval [t_begin, t_end).
struct Contact {
  VertexId u = 0;
  VertexId v = 0;
  Timestamp t_begin = 0;
  Timestamp t_end = 0;

  friend auto operator<=>(const Contact&, const Contact&) = default;
};

enum class Semantics { kPoint, kWeak, kStrong };

inline std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::kPoint: return "point";
    case Semantics::kWeak: return "weak";
    case Semantics::kStrong: return "strong";
  }
  return "?";
}

struct QueryInterval {
  Timestamp t_begin = 0;
  Timestamp t_end = 0;
  Semantics semantics = Semantics::kPoint;

  static QueryInterval point(Timestamp t) { return {t, t, Semantics::kPoint}; }
  static QueryInterval weak(Timestamp b, Timestamp e) {
    return {b, e, Semantics::kWeak};
  }
  static QueryInterval strong(Timestamp b, Timestamp e) {
    return {b, e, Semantics::kStrong};
  }
  bool is_point() const { return t_begin == t_end; }
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Query asked with semantics the operation does not support.
class SemanticsError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& reason) : Error(reason) {}
  ValidationError(const std::string& reason, const Contact& c)
      : Error(reason + " (contact " + std::to_string(c.u) + " " +
              std::to_string(c.v) + " [" + std::to_string(c.t_begin) + "," +
              std::to_string(c.t_end) + "))"),
        contact(c) {}

  std::optional<Contact> contact;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class DecodingError : public Error {
 public:
  using Error::Error;
};

class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line_no)
      : Error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}

  std::size_t line;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class UnsupportedVersionError : public Error {
 public:
  using Error::Error;
};

class InfeasibleParametersError : public Error {
 public:
  using Error::Error;
};

// A contact satisfies a weak (or point) query when its active interval
// overlaps [t_begin, t_end]; it satisfies a strong query when it covers the
// whole interval. With half-open contacts both reduce to the same test for
// point queries.
inline bool contact_matches(const Contact& c, const QueryInterval& q) {
  if (q.semantics == Semantics::kStrong)
    return c.t_begin <= q.t_begin && c.t_end > q.t_end;
  return c.t_begin <= q.t_end && c.t_end > q.t_begin;
}

inline constexpr std::uint32_t kFixtureVertexCount = 5;
inline constexpr std::uint32_t kFixtureLifetime = 7;

// The five-vertex example graph used throughout the tests. Vertices a..e are
// mapped to ids 0..4; the lifetime is [0, 7).
inline std::vector<Contact> canonical_fixture() {
  return {
      {0, 1, 1, 3},  // (a,b)
      {0, 3, 2, 3},  // (a,d)
      {0, 3, 4, 6},  // (a,d)
      {1, 2, 3, 6},  // (b,c)
      {1, 4, 3, 5},  // (b,e)
      {3, 1, 0, 6},  // (d,b)
      {4, 3, 3, 5},  // (e,d)
  };
}

// Checks ranges and durations, drops exact duplicates, sorts by (u, v,
// t_begin) and rejects overlapping contacts of the same edge. Contacts of one
// edge may touch ([1,3) followed by [3,5)) but never overlap.
inline std::vector<Contact> validate(std::vector<Contact> contacts,
                                     std::uint32_t n, std::uint32_t tau) {
  for (const Contact& c : contacts) {
    if (c.u >= n) throw ValidationError("source vertex out of range", c);
    if (c.v >= n) throw ValidationError("target vertex out of range", c);
    if (c.t_end >= tau)
      throw ValidationError("deactivation time out of range", c);
    if (c.t_begin >= c.t_end)
      throw ValidationError("contact needs positive duration", c);
  }
  std::sort(contacts.begin(), contacts.end());
  contacts.erase(std::unique(contacts.begin(), contacts.end()),
                 contacts.end());
  for (std::size_t i = 1; i < contacts.size(); ++i) {
    const Contact& prev = contacts[i - 1];
    const Contact& cur = contacts[i];
    if (prev.u == cur.u && prev.v == cur.v && prev.t_end > cur.t_begin)
      throw ValidationError("contacts of the same edge overlap", cur);
  }
  return contacts;
}

// Uniform query contract implemented by the brute-force oracle and all six
// compact structures. Implementations are immutable after construction and
// safe for concurrent reads.
class TemporalGraphIndex {
 public:
  virtual ~TemporalGraphIndex() = default;

  virtual std::string_view name() const = 0;
  virtual std::uint32_t vertex_count() const = 0;
  virtual std::uint32_t lifetime() const = 0;
  virtual std::uint64_t contact_count() const = 0;
  virtual std::uint64_t space_bits() const = 0;

  virtual bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const = 0;
  // Smallest activation time >= t of edge (u, v); point-time only.
  virtual std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                                   Timestamp t) const = 0;
  // Sorted target vertices v with has_edge(u, v, q).
  virtual std::vector<VertexId> neighbors(VertexId u,
                                          const QueryInterval& q) const = 0;
  // Sorted source vertices u with has_edge(u, v, q).
  virtual std::vector<VertexId> neighbors_r(VertexId v,
                                            const QueryInterval& q) const = 0;
  // Sorted edges with a contact satisfying q.
  virtual std::vector<Edge> aggregate(const QueryInterval& q) const = 0;
  // Sorted edges with an activation in [t_begin, t_end]; weak/point only.
  virtual std::vector<Edge> activated_edges(const QueryInterval& q) const = 0;
  // Sorted edges with a deactivation in [t_begin, t_end]; weak/point only.
  virtual std::vector<Edge> deactivated_edges(const QueryInterval& q) const = 0;
  // Weak: activated or deactivated. Strong: at least one activation and one
  // deactivation inside the interval.
  virtual std::vector<Edge> changed_edges(const QueryInterval& q) const = 0;

 protected:
  void require_vertex(VertexId x) const {
    if (x >= vertex_count()) throw RangeError("vertex id out of range");
  }

  void require_time(Timestamp t) const {
    if (t >= lifetime()) throw RangeError("timestamp out of range");
  }

  void require_interval(const QueryInterval& q) const {
    if (q.t_begin > q.t_end)
      throw RangeError("interval begins after it ends");
    if (q.t_end >= lifetime()) throw RangeError("timestamp out of range");
    if (q.semantics == Semantics::kPoint && !q.is_point())
      throw RangeError("point query with distinct endpoints");
  }

  void require_weak_or_point(const QueryInterval& q) const {
    require_interval(q);
    if (q.semantics == Semantics::kStrong)
      throw SemanticsError("query supports only weak or point semantics");
  }

  std::vector<Edge> aggregate_via_neighbors(const QueryInterval& q) const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (VertexId v : neighbors(u, q)) out.emplace_back(u, v);
    return out;  // sorted: u ascending, neighbors sorted
  }

  // changed_edges from the activation/deactivation sets: union under weak
  // semantics, per-edge intersection under strong.
  std::vector<Edge> changed_from_events(const QueryInterval& q) const {
    require_interval(q);
    QueryInterval w = q;
    w.semantics = q.is_point() ? Semantics::kPoint : Semantics::kWeak;
    std::vector<Edge> act = activated_edges(w);
    std::vector<Edge> deact = deactivated_edges(w);
    std::vector<Edge> out;
    if (q.semantics == Semantics::kStrong) {
      std::set_intersection(act.begin(), act.end(), deact.begin(), deact.end(),
                            std::back_inserter(out));
    } else {
      std::set_union(act.begin(), act.end(), deact.begin(), deact.end(),
                     std::back_inserter(out));
    }
    return out;
  }
};

}  // namespace tgraph
