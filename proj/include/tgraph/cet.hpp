#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tgraph/bitvector.hpp"
#include "tgraph/core.hpp"
#include "tgraph/wavelet.hpp"

namespace tgraph {

// Compact events ordered by time: a 2-dimensional sequence of (u, v) event
// symbols grouped by timestamp, with a bitmap whose t-th one bit marks the
// start of timestamp t's block. Direct and reverse neighbor queries have the
// same shape; one just fixes the other tuple coordinate.
class CetIndex : public TemporalGraphIndex {
 public:
  CetIndex(std::vector<Contact> contacts, std::uint32_t n, std::uint32_t tau)
      : CetIndex(validate(std::move(contacts), n, tau), n, tau, kValidated) {}

  std::string_view name() const override { return "cet"; }
  std::uint32_t vertex_count() const override { return n_; }
  std::uint32_t lifetime() const override { return tau_; }
  std::uint64_t contact_count() const override { return contact_count_; }

  std::uint64_t space_bits() const override {
    return seq_.size_bits() + marks_.size_bits() + 192;
  }

  const InterleavedWaveletTree& sequence() const { return seq_; }
  const BitVector& marks() const { return marks_; }

  // Number of events in blocks 0..t; t == -1 gives 0.
  std::uint64_t events_through(std::int64_t t) const {
    if (t < 0) return 0;
    if (t + 1 >= tau_) return seq_.size();
    return marks_.rank0(marks_.select1(static_cast<std::uint64_t>(t) + 2));
  }

  bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const override {
    require_vertex(u);
    require_vertex(v);
    require_interval(q);
    std::uint64_t f_begin = seq_.rank({u, v}, events_through(q.t_begin));
    std::uint64_t f_end = seq_.rank({u, v}, events_through(q.t_end));
    return combine(q.semantics, f_begin, f_end - f_begin);
  }

  std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                           Timestamp t) const override {
    require_vertex(u);
    require_vertex(v);
    require_time(t);
    std::uint64_t before =
        seq_.rank({u, v}, events_through(static_cast<std::int64_t>(t) - 1));
    std::uint64_t total = seq_.rank({u, v}, seq_.size());
    std::uint64_t f = (before & 1) ? before + 2 : before + 1;
    if (f > total) return std::nullopt;
    std::uint64_t pos = seq_.select({u, v}, f);
    return time_of(pos);
  }

  std::vector<VertexId> neighbors(VertexId u,
                                  const QueryInterval& q) const override {
    require_vertex(u);
    require_interval(q);
    return neighbor_merge(q, u, /*fix_first=*/true);
  }

  std::vector<VertexId> neighbors_r(VertexId v,
                                    const QueryInterval& q) const override {
    require_vertex(v);
    require_interval(q);
    return neighbor_merge(q, v, /*fix_first=*/false);
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

  CetIndex() = default;

  enum EventFilter { kActivated, kDeactivated, kChangedWeak, kChangedStrong };

  CetIndex(const std::vector<Contact>& contacts, std::uint32_t n,
           std::uint32_t tau, ValidatedTag)
      : n_(n), tau_(tau), contact_count_(contacts.size()) {
    std::vector<std::vector<InterleavedWaveletTree::Tuple>> blocks(tau_);
    for (const Contact& c : contacts) {
      blocks[c.t_begin].push_back({c.u, c.v});
      blocks[c.t_end].push_back({c.u, c.v});
    }
    std::vector<InterleavedWaveletTree::Tuple> seq;
    seq.reserve(contacts.size() * 2);
    BitVectorBuilder marks;
    for (std::uint32_t t = 0; t < tau_; ++t) {
      auto& block = blocks[t];
      std::sort(block.begin(), block.end());
      marks.push_back(true);
      marks.append_zeros(block.size());
      seq.insert(seq.end(), block.begin(), block.end());
    }
    seq_ = InterleavedWaveletTree(seq, n_, n_);
    marks_ = marks.build();
    audit_events(contacts);
  }

  // The stored sequence must hold exactly one event per contact endpoint.
  void audit_events(const std::vector<Contact>& contacts) const {
    std::vector<std::pair<InterleavedWaveletTree::Tuple, Timestamp>> expect;
    expect.reserve(contacts.size() * 2);
    for (const Contact& c : contacts) {
      expect.push_back({{c.u, c.v}, c.t_begin});
      expect.push_back({{c.u, c.v}, c.t_end});
    }
    std::sort(expect.begin(), expect.end());
    std::vector<std::pair<InterleavedWaveletTree::Tuple, Timestamp>> got;
    got.reserve(seq_.size());
    for (std::uint64_t p = 1; p <= seq_.size(); ++p)
      got.push_back({seq_.access(p), time_of(p)});
    std::sort(got.begin(), got.end());
    if (got != expect)
      throw Error("event sequence does not match the contact endpoints");
  }

  // Timestamp of the block holding sequence position pos.
  Timestamp time_of(std::uint64_t pos) const {
    return static_cast<Timestamp>(marks_.rank1(marks_.select0(pos)) - 1);
  }

  static bool combine(Semantics s, std::uint64_t f_begin, std::uint64_t f_mid) {
    switch (s) {
      case Semantics::kPoint: return f_begin & 1;
      case Semantics::kWeak: return (f_begin & 1) || f_mid > 0;
      case Semantics::kStrong: return (f_begin & 1) && f_mid == 0;
    }
    return false;
  }

  std::vector<VertexId> neighbor_merge(const QueryInterval& q,
                                       std::uint32_t fixed,
                                       bool fix_first) const {
    std::uint64_t cb = events_through(q.t_begin);
    std::uint64_t ce = events_through(q.t_end);
    auto report = [&](std::uint64_t lo, std::uint64_t hi) {
      if (lo > hi || hi == 0) return std::vector<WaveletTree::SymbolCount>{};
      return fix_first ? seq_.report_fixed_first(fixed, lo, hi)
                       : seq_.report_fixed_second(fixed, lo, hi);
    };
    auto f_begin = report(1, cb);
    auto f_mid = report(cb + 1, ce);
    std::vector<VertexId> out;
    std::size_t a = 0, b = 0;
    while (a < f_begin.size() || b < f_mid.size()) {
      std::uint32_t sym;
      std::uint64_t fb = 0, fm = 0;
      if (b >= f_mid.size() ||
          (a < f_begin.size() && f_begin[a].first <= f_mid[b].first)) {
        sym = f_begin[a].first;
        fb = f_begin[a].second;
        ++a;
        if (b < f_mid.size() && f_mid[b].first == sym) {
          fm = f_mid[b].second;
          ++b;
        }
      } else {
        sym = f_mid[b].first;
        fm = f_mid[b].second;
        ++b;
      }
      if (combine(q.semantics, fb, fm)) out.push_back(sym);
    }
    return out;
  }

  std::vector<Edge> event_edges(const QueryInterval& q,
                                EventFilter filter) const {
    std::uint64_t c0 = events_through(static_cast<std::int64_t>(q.t_begin) - 1);
    std::uint64_t c1 = events_through(q.t_end);
    std::vector<Edge> out;
    if (c1 <= c0) return out;
    for (auto& [tuple, b] : seq_.full_report(c0 + 1, c1)) {
      std::uint64_t a = seq_.rank(tuple, c0);
      bool hit = false;
      switch (filter) {
        case kActivated: hit = b >= 2 || (b == 1 && (a & 1) == 0); break;
        case kDeactivated: hit = b >= 2 || (b == 1 && (a & 1) == 1); break;
        case kChangedWeak: hit = b >= 1; break;
        case kChangedStrong: hit = b >= 2; break;
      }
      if (hit) out.emplace_back(tuple.first, tuple.second);
    }
    return out;
  }

  std::uint32_t n_ = 0;
  std::uint32_t tau_ = 0;
  std::uint64_t contact_count_ = 0;
  InterleavedWaveletTree seq_;
  BitVector marks_;
};

}  // namespace tgraph
