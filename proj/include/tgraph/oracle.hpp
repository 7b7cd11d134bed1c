#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tgraph/core.hpp"

namespace tgraph {

// Brute-force contact-list index: every query is a linear scan over the
// validated contacts. Ground truth for all compact structures.
class OracleIndex : public TemporalGraphIndex {
 public:
  OracleIndex(std::vector<Contact> contacts, std::uint32_t n, std::uint32_t tau)
      : contacts_(validate(std::move(contacts), n, tau)), n_(n), tau_(tau) {}

  std::string_view name() const override { return "oracle"; }
  std::uint32_t vertex_count() const override { return n_; }
  std::uint32_t lifetime() const override { return tau_; }
  std::uint64_t contact_count() const override { return contacts_.size(); }
  std::uint64_t space_bits() const override {
    return contacts_.size() * sizeof(Contact) * 8;
  }

  const std::vector<Contact>& contacts() const { return contacts_; }

  bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const override {
    require_vertex(u);
    require_vertex(v);
    require_interval(q);
    for (const Contact& c : contacts_)
      if (c.u == u && c.v == v && contact_matches(c, q)) return true;
    return false;
  }

  std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                           Timestamp t) const override {
    require_vertex(u);
    require_vertex(v);
    require_time(t);
    std::optional<Timestamp> best;
    for (const Contact& c : contacts_)
      if (c.u == u && c.v == v && c.t_begin >= t &&
          (!best || c.t_begin < *best))
        best = c.t_begin;
    return best;
  }

  std::vector<VertexId> neighbors(VertexId u,
                                  const QueryInterval& q) const override {
    require_vertex(u);
    require_interval(q);
    std::vector<VertexId> out;
    for (const Contact& c : contacts_)
      if (c.u == u && contact_matches(c, q)) out.push_back(c.v);
    return dedupe(std::move(out));
  }

  std::vector<VertexId> neighbors_r(VertexId v,
                                    const QueryInterval& q) const override {
    require_vertex(v);
    require_interval(q);
    std::vector<VertexId> out;
    for (const Contact& c : contacts_)
      if (c.v == v && contact_matches(c, q)) out.push_back(c.u);
    return dedupe(std::move(out));
  }

  std::vector<Edge> aggregate(const QueryInterval& q) const override {
    require_interval(q);
    std::vector<Edge> out;
    for (const Contact& c : contacts_)
      if (contact_matches(c, q)) out.emplace_back(c.u, c.v);
    return dedupe(std::move(out));
  }

  std::vector<Edge> activated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    std::vector<Edge> out;
    for (const Contact& c : contacts_)
      if (c.t_begin >= q.t_begin && c.t_begin <= q.t_end)
        out.emplace_back(c.u, c.v);
    return dedupe(std::move(out));
  }

  std::vector<Edge> deactivated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    std::vector<Edge> out;
    for (const Contact& c : contacts_)
      if (c.t_end >= q.t_begin && c.t_end <= q.t_end)
        out.emplace_back(c.u, c.v);
    return dedupe(std::move(out));
  }

  std::vector<Edge> changed_edges(const QueryInterval& q) const override {
    return changed_from_events(q);
  }

 private:
  template <class T>
  static std::vector<T> dedupe(std::vector<T> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  std::vector<Contact> contacts_;
  std::uint32_t n_;
  std::uint32_t tau_;
};

}  // namespace tgraph
