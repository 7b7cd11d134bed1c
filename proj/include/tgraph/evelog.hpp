#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <vector>

#include "tgraph/codecs.hpp"
#include "tgraph/core.hpp"

namespace tgraph {

// Adjacency log of events: per-source time-ordered lists of (target, time)
// pairs, one pair per activation or deactivation. Whether a pair activates or
// deactivates is implicit in the parity of the target's occurrence count.
// Targets are ETDC coded against one structure-wide dictionary; timestamps
// are delta-gap coded.
class EveLogIndex : public TemporalGraphIndex {
 public:
  struct Events {
    std::vector<std::uint32_t> targets;
    std::vector<Timestamp> times;
  };

  EveLogIndex(std::vector<Contact> contacts, std::uint32_t n,
              std::uint32_t tau, bool with_reverse = false)
      : EveLogIndex(validate(std::move(contacts), n, tau), n, tau,
                    with_reverse, kValidated) {}

  std::string_view name() const override { return "evelog"; }
  std::uint32_t vertex_count() const override { return n_; }
  std::uint32_t lifetime() const override { return tau_; }
  std::uint64_t contact_count() const override { return contact_count_; }

  std::uint64_t space_bits() const override {
    std::uint64_t bits = target_bytes_.size() * 8 + time_bytes_.size() * 8 +
                         target_off_.size() * 64 + time_off_.size() * 64 +
                         dict_.size_bits() + 192;
    if (twin_) bits += twin_->space_bits();
    return bits;
  }

  bool has_reverse() const { return twin_ != nullptr; }

  // Decoded event list of u, time-ordered.
  Events events(VertexId u) const {
    require_vertex(u);
    Events ev;
    std::size_t tpos = time_off_[u];
    std::vector<std::uint64_t> times = nondecreasing_read(time_bytes_, tpos);
    ev.times.assign(times.begin(), times.end());
    std::size_t vpos = target_off_[u];
    ev.targets.reserve(ev.times.size());
    for (std::size_t k = 0; k < ev.times.size(); ++k)
      ev.targets.push_back(dict_.decode(target_bytes_, vpos));
    return ev;
  }

  bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const override {
    require_vertex(u);
    require_vertex(v);
    require_interval(q);
    Events ev = events(u);
    std::size_t i = cut(ev.times, q.t_begin);
    std::size_t j = cut(ev.times, q.t_end);
    std::uint64_t f_begin = 0, f_mid = 0;
    for (std::size_t k = 0; k < i; ++k) f_begin += ev.targets[k] == v;
    for (std::size_t k = i; k < j; ++k) f_mid += ev.targets[k] == v;
    return combine(q.semantics, f_begin, f_mid);
  }

  std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                           Timestamp t) const override {
    require_vertex(u);
    require_vertex(v);
    require_time(t);
    Events ev = events(u);
    std::uint64_t seen = 0;
    for (std::size_t k = 0; k < ev.targets.size(); ++k) {
      if (ev.targets[k] != v) continue;
      ++seen;
      if ((seen & 1) && ev.times[k] >= t) return ev.times[k];
    }
    return std::nullopt;
  }

  std::vector<VertexId> neighbors(VertexId u,
                                  const QueryInterval& q) const override {
    require_vertex(u);
    require_interval(q);
    Events ev = events(u);
    std::size_t i = cut(ev.times, q.t_begin);
    std::size_t j = cut(ev.times, q.t_end);
    std::vector<std::uint32_t> f_begin(n_, 0), f_mid(n_, 0);
    std::vector<VertexId> touched;
    for (std::size_t k = 0; k < j; ++k) {
      VertexId v = ev.targets[k];
      if (f_begin[v] == 0 && f_mid[v] == 0) touched.push_back(v);
      (k < i ? f_begin[v] : f_mid[v])++;
    }
    std::sort(touched.begin(), touched.end());
    std::vector<VertexId> out;
    for (VertexId v : touched)
      if (combine(q.semantics, f_begin[v], f_mid[v])) out.push_back(v);
    return out;
  }

  std::vector<VertexId> neighbors_r(VertexId v,
                                    const QueryInterval& q) const override {
    require_vertex(v);
    require_interval(q);
    if (twin_) return twin_->neighbors(v, q);
    // Slow path; decompresses every event list.
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u)
      if (has_edge(u, v, q)) out.push_back(u);
    return out;
  }

  std::vector<Edge> aggregate(const QueryInterval& q) const override {
    require_interval(q);
    return aggregate_via_neighbors(q);
  }

  std::vector<Edge> activated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    return event_edges(q, kActivated);
  }

  std::vector<Edge> deactivated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    return event_edges(q, kDeactivated);
  }

  std::vector<Edge> changed_edges(const QueryInterval& q) const override {
    require_interval(q);
    return event_edges(q, q.semantics == Semantics::kStrong ? kChangedStrong
                                                            : kChangedWeak);
  }

 private:
  friend class IndexCodec;

  struct ValidatedTag {};
  static constexpr ValidatedTag kValidated{};

  EveLogIndex() = default;

  enum EventFilter { kActivated, kDeactivated, kChangedWeak, kChangedStrong };

  EveLogIndex(const std::vector<Contact>& contacts, std::uint32_t n,
              std::uint32_t tau, bool with_reverse, ValidatedTag)
      : n_(n), tau_(tau), contact_count_(contacts.size()) {
    // (time, target) events per source; a contact emits one event at each end.
    std::vector<std::vector<std::pair<Timestamp, VertexId>>> per_source(n_);
    std::vector<std::pair<std::uint32_t, std::uint64_t>> freq;
    std::vector<std::uint64_t> counts(n_, 0);
    for (const Contact& c : contacts) {
      per_source[c.u].emplace_back(c.t_begin, c.v);
      per_source[c.u].emplace_back(c.t_end, c.v);
      counts[c.v] += 2;
    }
    for (VertexId v = 0; v < n_; ++v)
      if (counts[v] > 0) freq.emplace_back(v, counts[v]);
    if (freq.empty()) freq.emplace_back(0, 0);  // empty graph still decodes
    dict_ = EtdcDictionary::build(std::move(freq));

    target_off_.assign(n_ + 1, 0);
    time_off_.assign(n_ + 1, 0);
    std::vector<std::uint64_t> times;
    for (VertexId u = 0; u < n_; ++u) {
      target_off_[u] = target_bytes_.size();
      time_off_[u] = time_bytes_.size();
      auto& evs = per_source[u];
      std::sort(evs.begin(), evs.end());
      times.clear();
      for (auto& [t, v] : evs) {
        times.push_back(t);
        dict_.encode(v, target_bytes_);
      }
      nondecreasing_append(times, time_bytes_);
    }
    target_off_[n_] = target_bytes_.size();
    time_off_[n_] = time_bytes_.size();

    if (with_reverse) {
      std::vector<Contact> reversed(contacts);
      for (Contact& c : reversed) std::swap(c.u, c.v);
      std::sort(reversed.begin(), reversed.end());
      twin_.reset(new EveLogIndex(reversed, n_, tau_, false, kValidated));
    }
  }

  // Events with time <= t, as an index into the time-ordered list.
  static std::size_t cut(const std::vector<Timestamp>& times, Timestamp t) {
    return std::upper_bound(times.begin(), times.end(), t) - times.begin();
  }

  // Parity rule shared by the event structures: f_begin counts events up to
  // the interval start (odd means active there), f_mid counts events inside
  // the rest of the interval.
  static bool combine(Semantics s, std::uint64_t f_begin, std::uint64_t f_mid) {
    switch (s) {
      case Semantics::kPoint: return f_begin & 1;
      case Semantics::kWeak: return (f_begin & 1) || f_mid > 0;
      case Semantics::kStrong: return (f_begin & 1) && f_mid == 0;
    }
    return false;
  }

  std::vector<Edge> event_edges(const QueryInterval& q,
                                EventFilter filter) const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < n_; ++u) {
      Events ev = events(u);
      std::size_t i0 =
          q.t_begin == 0 ? 0 : cut(ev.times, q.t_begin - 1);
      std::size_t j = cut(ev.times, q.t_end);
      std::vector<std::uint32_t> before(n_, 0), window(n_, 0);
      std::vector<VertexId> touched;
      for (std::size_t k = 0; k < j; ++k) {
        VertexId v = ev.targets[k];
        if (k < i0) {
          before[v]++;
        } else {
          if (window[v] == 0) touched.push_back(v);
          window[v]++;
        }
      }
      std::sort(touched.begin(), touched.end());
      for (VertexId v : touched) {
        std::uint32_t a = before[v], b = window[v];
        // Occurrence ranks a+1..a+b alternate activation (odd) and
        // deactivation (even).
        bool hit = false;
        switch (filter) {
          case kActivated: hit = b >= 2 || (b == 1 && (a & 1) == 0); break;
          case kDeactivated: hit = b >= 2 || (b == 1 && (a & 1) == 1); break;
          case kChangedWeak: hit = b >= 1; break;
          case kChangedStrong: hit = b >= 2; break;
        }
        if (hit) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::uint32_t n_ = 0;
  std::uint32_t tau_ = 0;
  std::uint64_t contact_count_ = 0;
  EtdcDictionary dict_;
  std::vector<std::uint8_t> target_bytes_;
  std::vector<std::uint8_t> time_bytes_;
  std::vector<std::uint64_t> target_off_;
  std::vector<std::uint64_t> time_off_;
  std::unique_ptr<EveLogIndex> twin_;
};

}  // namespace tgraph
