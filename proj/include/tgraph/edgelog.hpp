#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/codecs.hpp"
#include "tgraph/core.hpp"

namespace tgraph {

// Time-interval log per edge: per-source adjacency lists whose targets carry
// sorted interval lists, both delta-gap compressed into contiguous arenas.
// Reverse queries either fall back to a full scan or, when built with
// with_reverse, run the direct query on a target-indexed twin.
class EdgeLogIndex : public TemporalGraphIndex {
 public:
  using Interval = std::pair<Timestamp, Timestamp>;

  EdgeLogIndex(std::vector<Contact> contacts, std::uint32_t n,
               std::uint32_t tau, bool with_reverse = false)
      : EdgeLogIndex(validate(std::move(contacts), n, tau), n, tau,
                     with_reverse, kValidated) {}

  std::string_view name() const override { return "edgelog"; }
  std::uint32_t vertex_count() const override { return n_; }
  std::uint32_t lifetime() const override { return tau_; }
  std::uint64_t contact_count() const override { return contact_count_; }

  std::uint64_t space_bits() const override {
    std::uint64_t bits = targets_bytes_.size() * 8 +
                         intervals_bytes_.size() * 8 +
                         target_off_.size() * 64 + target_base_.size() * 64 +
                         interval_off_.size() * 64 + 192;
    if (twin_) bits += twin_->space_bits();
    return bits;
  }

  bool has_reverse() const { return twin_ != nullptr; }

  // Sorted target list of u, decoded.
  std::vector<std::uint32_t> targets(VertexId u) const {
    require_vertex(u);
    std::size_t pos = target_off_[u];
    std::vector<std::uint64_t> raw = deltagap_read(targets_bytes_, pos);
    return std::vector<std::uint32_t>(raw.begin(), raw.end());
  }

  // Interval list of the edge with the given ordinal, decoded.
  std::vector<Interval> intervals(std::uint64_t edge_ordinal) const {
    std::size_t pos = interval_off_[edge_ordinal];
    std::vector<std::uint64_t> bounds =
        nondecreasing_read(intervals_bytes_, pos);
    std::vector<Interval> out;
    out.reserve(bounds.size() / 2);
    for (std::size_t k = 0; k + 1 < bounds.size(); k += 2)
      out.emplace_back(static_cast<Timestamp>(bounds[k]),
                       static_cast<Timestamp>(bounds[k + 1]));
    return out;
  }

  bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const override {
    require_vertex(u);
    require_vertex(v);
    require_interval(q);
    std::vector<std::uint32_t> ts = targets(u);
    auto it = std::lower_bound(ts.begin(), ts.end(), v);
    if (it == ts.end() || *it != v) return false;
    std::uint64_t ordinal = target_base_[u] + (it - ts.begin());
    return intervals_match(intervals(ordinal), q);
  }

  std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                           Timestamp t) const override {
    require_vertex(u);
    require_vertex(v);
    require_time(t);
    std::vector<std::uint32_t> ts = targets(u);
    auto it = std::lower_bound(ts.begin(), ts.end(), v);
    if (it == ts.end() || *it != v) return std::nullopt;
    std::vector<Interval> ivs = intervals(target_base_[u] + (it - ts.begin()));
    auto iv = std::lower_bound(
        ivs.begin(), ivs.end(), t,
        [](const Interval& a, Timestamp x) { return a.first < x; });
    if (iv == ivs.end()) return std::nullopt;
    return iv->first;
  }

  std::vector<VertexId> neighbors(VertexId u,
                                  const QueryInterval& q) const override {
    require_vertex(u);
    require_interval(q);
    std::vector<VertexId> out;
    std::vector<std::uint32_t> ts = targets(u);
    for (std::size_t k = 0; k < ts.size(); ++k)
      if (intervals_match(intervals(target_base_[u] + k), q))
        out.push_back(ts[k]);
    return out;
  }

  std::vector<VertexId> neighbors_r(VertexId v,
                                    const QueryInterval& q) const override {
    require_vertex(v);
    require_interval(q);
    if (twin_) return twin_->neighbors(v, q);
    // Documented slow path: scans every adjacency list.
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u) {
      std::vector<std::uint32_t> ts = targets(u);
      auto it = std::lower_bound(ts.begin(), ts.end(), v);
      if (it != ts.end() && *it == v &&
          intervals_match(intervals(target_base_[u] + (it - ts.begin())), q))
        out.push_back(u);
    }
    return out;
  }

  std::vector<Edge> aggregate(const QueryInterval& q) const override {
    require_interval(q);
    return aggregate_via_neighbors(q);
  }

  std::vector<Edge> activated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    return scan_events(q, /*activations=*/true);
  }

  std::vector<Edge> deactivated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    return scan_events(q, /*activations=*/false);
  }

  std::vector<Edge> changed_edges(const QueryInterval& q) const override {
    return changed_from_events(q);
  }

 private:
  friend class IndexCodec;

  struct ValidatedTag {};
  static constexpr ValidatedTag kValidated{};

  EdgeLogIndex() = default;

  EdgeLogIndex(const std::vector<Contact>& contacts, std::uint32_t n,
               std::uint32_t tau, bool with_reverse, ValidatedTag)
      : n_(n), tau_(tau), contact_count_(contacts.size()) {
    target_off_.assign(n_ + 1, 0);
    target_base_.assign(n_ + 1, 0);
    std::vector<std::uint64_t> scratch;
    std::size_t i = 0;
    interval_off_.push_back(0);
    for (VertexId u = 0; u < n_; ++u) {
      target_off_[u] = targets_bytes_.size();
      target_base_[u] = interval_off_.size() - 1;
      std::vector<std::uint64_t> vs;
      std::size_t ustart = i;
      while (i < contacts.size() && contacts[i].u == u) {
        if (vs.empty() || vs.back() != contacts[i].v)
          vs.push_back(contacts[i].v);
        ++i;
      }
      deltagap_append(vs, targets_bytes_);
      // One interval list per distinct target, in target order.
      std::size_t k = ustart;
      for (std::uint64_t v : vs) {
        scratch.clear();
        while (k < i && contacts[k].v == v) {
          scratch.push_back(contacts[k].t_begin);
          scratch.push_back(contacts[k].t_end);
          ++k;
        }
        nondecreasing_append(scratch, intervals_bytes_);
        interval_off_.push_back(intervals_bytes_.size());
      }
    }
    target_off_[n_] = targets_bytes_.size();
    target_base_[n_] = interval_off_.size() - 1;
    if (with_reverse) {
      std::vector<Contact> reversed(contacts);
      for (Contact& c : reversed) std::swap(c.u, c.v);
      std::sort(reversed.begin(), reversed.end());
      twin_.reset(new EdgeLogIndex(reversed, n_, tau_, false, kValidated));
    }
  }

  // Intervals are sorted by begin and pairwise disjoint, so both ends are
  // increasing and one binary search settles each semantics.
  static bool intervals_match(const std::vector<Interval>& ivs,
                              const QueryInterval& q) {
    if (q.semantics == Semantics::kStrong) {
      auto it = std::upper_bound(
          ivs.begin(), ivs.end(), q.t_begin,
          [](Timestamp x, const Interval& a) { return x < a.first; });
      if (it == ivs.begin()) return false;
      --it;
      return it->second > q.t_end;
    }
    auto it = std::lower_bound(
        ivs.begin(), ivs.end(), q.t_begin,
        [](const Interval& a, Timestamp x) { return a.second <= x; });
    return it != ivs.end() && it->first <= q.t_end;
  }

  std::vector<Edge> scan_events(const QueryInterval& q,
                                bool activations) const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < n_; ++u) {
      std::vector<std::uint32_t> ts = targets(u);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        std::vector<Interval> ivs = intervals(target_base_[u] + k);
        bool hit = false;
        if (activations) {
          auto it = std::lower_bound(
              ivs.begin(), ivs.end(), q.t_begin,
              [](const Interval& a, Timestamp x) { return a.first < x; });
          hit = it != ivs.end() && it->first <= q.t_end;
        } else {
          auto it = std::lower_bound(
              ivs.begin(), ivs.end(), q.t_begin,
              [](const Interval& a, Timestamp x) { return a.second < x; });
          hit = it != ivs.end() && it->second <= q.t_end;
        }
        if (hit) out.emplace_back(u, ts[k]);
      }
    }
    return out;
  }

  std::uint32_t n_ = 0;
  std::uint32_t tau_ = 0;
  std::uint64_t contact_count_ = 0;
  std::vector<std::uint8_t> targets_bytes_;
  std::vector<std::uint8_t> intervals_bytes_;
  std::vector<std::uint64_t> target_off_;    // byte offset of u's target list
  std::vector<std::uint64_t> target_base_;   // edge ordinal of u's first target
  std::vector<std::uint64_t> interval_off_;  // byte offset per edge ordinal
  std::unique_ptr<EdgeLogIndex> twin_;
};

}  // namespace tgraph
