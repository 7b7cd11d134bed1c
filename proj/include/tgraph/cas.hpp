#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <vector>

#include "tgraph/bitvector.hpp"
#include "tgraph/core.hpp"
#include "tgraph/wavelet.hpp"

namespace tgraph {

// Compact adjacency sequence: one wavelet-tree sequence S of per-source event
// blocks, each an event list ordered by time with repeated timestamps written
// once, plus a bitmap B whose u-th one bit marks the start of u's block.
// Timestamp symbols occupy [0, tau), target symbols [tau, tau + n).
class CasIndex : public TemporalGraphIndex {
 public:
  CasIndex(std::vector<Contact> contacts, std::uint32_t n, std::uint32_t tau,
           bool with_reverse = false)
      : CasIndex(validate(std::move(contacts), n, tau), n, tau, with_reverse,
                 kValidated) {}

  std::string_view name() const override { return "cas"; }
  std::uint32_t vertex_count() const override { return n_; }
  std::uint32_t lifetime() const override { return tau_; }
  std::uint64_t contact_count() const override { return contact_count_; }

  std::uint64_t space_bits() const override {
    std::uint64_t bits = seq_.size_bits() + marks_.size_bits() + 192;
    if (twin_) bits += twin_->space_bits();
    return bits;
  }

  bool has_reverse() const { return twin_ != nullptr; }

  const WaveletTree& sequence() const { return seq_; }
  const BitVector& marks() const { return marks_; }

  // 1-based inclusive bounds of u's block in S; i > j when the block is
  // empty.
  std::pair<std::uint64_t, std::uint64_t> block_bounds(VertexId u) const {
    require_vertex(u);
    std::uint64_t i = marks_.rank0(marks_.select1(u + 1)) + 1;
    std::uint64_t j = u + 2 <= n_ ? marks_.rank0(marks_.select1(u + 2))
                                  : seq_.size();
    return {i, j};
  }

  bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const override {
    require_vertex(u);
    require_vertex(v);
    require_interval(q);
    auto [i, j] = block_bounds(u);
    if (i > j) return false;
    std::uint64_t cb = cut(i, j, q.t_begin);
    std::uint64_t ce = cut(i, j, q.t_end);
    std::uint32_t cv = tau_ + v;
    std::uint64_t f_begin = cb > i ? seq_.range_count(cv, cv, i, cb - 1) : 0;
    std::uint64_t f_mid = ce > cb ? seq_.range_count(cv, cv, cb, ce - 1) : 0;
    return combine(q.semantics, f_begin, f_mid);
  }

  std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                           Timestamp t) const override {
    require_vertex(u);
    require_vertex(v);
    require_time(t);
    auto [i, j] = block_bounds(u);
    if (i > j) return std::nullopt;
    std::uint32_t cv = tau_ + v;
    std::uint64_t base = seq_.rank(cv, i - 1);
    std::uint64_t total = seq_.rank(cv, j) - base;
    std::uint64_t c = t == 0 ? i : cut(i, j, t - 1);
    std::uint64_t before = c > i ? seq_.range_count(cv, cv, i, c - 1) : 0;
    // Occurrence parity: odd occurrences are activations.
    std::uint64_t f = (before & 1) ? before + 2 : before + 1;
    if (f > total) return std::nullopt;
    std::uint64_t pos = seq_.select(cv, base + f);
    return time_of(i, j, pos);
  }

  std::vector<VertexId> neighbors(VertexId u,
                                  const QueryInterval& q) const override {
    require_vertex(u);
    require_interval(q);
    std::vector<VertexId> out;
    auto [i, j] = block_bounds(u);
    if (i > j) return out;
    std::uint64_t cb = cut(i, j, q.t_begin);
    std::uint64_t ce = cut(i, j, q.t_end);
    auto f_begin = cb > i ? seq_.range_report(tau_, tau_ + n_ - 1, i, cb - 1)
                          : std::vector<WaveletTree::SymbolCount>{};
    auto f_mid = ce > cb ? seq_.range_report(tau_, tau_ + n_ - 1, cb, ce - 1)
                         : std::vector<WaveletTree::SymbolCount>{};
    merge_histograms(q.semantics, f_begin, f_mid, out);
    return out;
  }

  std::vector<VertexId> neighbors_r(VertexId v,
                                    const QueryInterval& q) const override {
    require_vertex(v);
    require_interval(q);
    if (twin_) return twin_->neighbors(v, q);
    // First approach of the reverse query: probe v's frequency in every
    // block. No decompression, but touches all sources.
    std::vector<VertexId> out;
    std::uint32_t cv = tau_ + v;
    for (VertexId u = 0; u < n_; ++u) {
      auto [i, j] = block_bounds(u);
      if (i > j) continue;
      std::uint64_t cb = cut(i, j, q.t_begin);
      std::uint64_t ce = cut(i, j, q.t_end);
      std::uint64_t f_begin = cb > i ? seq_.range_count(cv, cv, i, cb - 1) : 0;
      std::uint64_t f_mid = ce > cb ? seq_.range_count(cv, cv, cb, ce - 1) : 0;
      if (combine(q.semantics, f_begin, f_mid)) out.push_back(u);
    }
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

  enum EventFilter { kActivated, kDeactivated, kChangedWeak, kChangedStrong };

  CasIndex(const std::vector<Contact>& contacts, std::uint32_t n,
           std::uint32_t tau, bool with_reverse, ValidatedTag)
      : n_(n), tau_(tau), contact_count_(contacts.size()) {
    std::vector<std::vector<std::pair<Timestamp, VertexId>>> per_source(n_);
    for (const Contact& c : contacts) {
      per_source[c.u].emplace_back(c.t_begin, c.v);
      per_source[c.u].emplace_back(c.t_end, c.v);
    }
    std::vector<std::uint32_t> seq;
    BitVectorBuilder marks;
    for (VertexId u = 0; u < n_; ++u) {
      auto& evs = per_source[u];
      std::sort(evs.begin(), evs.end());
      marks.push_back(true);
      std::size_t start = seq.size();
      bool any = false;
      Timestamp prev = 0;
      for (auto& [t, v] : evs) {
        if (!any || t != prev) seq.push_back(t);
        seq.push_back(tau_ + v);
        any = true;
        prev = t;
      }
      marks.append_zeros(seq.size() - start);
    }
    seq_ = WaveletTree(seq, tau_ + n_);
    marks_ = marks.build();
    if (with_reverse) {
      std::vector<Contact> reversed(contacts);
      for (Contact& c : reversed) std::swap(c.u, c.v);
      std::sort(reversed.begin(), reversed.end());
      twin_.reset(new CasIndex(reversed, n_, tau_, false, kValidated));
    }
  }

  CasIndex() = default;

  // First position in S[i..j] whose timestamp symbol exceeds t; events before
  // it happened at times <= t. j + 1 when the whole block qualifies. t == -1
  // asks for the position of the first event.
  std::uint64_t cut(std::uint64_t i, std::uint64_t j, std::int64_t t) const {
    if (t < 0) {
      // Blocks start with a timestamp symbol, so i itself is the cut.
      return i;
    }
    auto r = seq_.range_next_value_pos(static_cast<std::uint32_t>(t), i, j);
    if (!r || r->first >= tau_) return j + 1;
    return r->second;
  }

  // Time of the event at position pos of u's block: the smallest t whose cut
  // lies beyond pos.
  Timestamp time_of(std::uint64_t i, std::uint64_t j, std::uint64_t pos) const {
    std::uint32_t lo = 0, hi = tau_ - 1;
    while (lo < hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      if (cut(i, j, mid) > pos)
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }

  static bool combine(Semantics s, std::uint64_t f_begin, std::uint64_t f_mid) {
    switch (s) {
      case Semantics::kPoint: return f_begin & 1;
      case Semantics::kWeak: return (f_begin & 1) || f_mid > 0;
      case Semantics::kStrong: return (f_begin & 1) && f_mid == 0;
    }
    return false;
  }

  void merge_histograms(Semantics s,
                        const std::vector<WaveletTree::SymbolCount>& f_begin,
                        const std::vector<WaveletTree::SymbolCount>& f_mid,
                        std::vector<VertexId>& out) const {
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
      if (combine(s, fb, fm)) out.push_back(sym - tau_);
    }
  }

  std::vector<Edge> event_edges(const QueryInterval& q,
                                EventFilter filter) const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < n_; ++u) {
      auto [i, j] = block_bounds(u);
      if (i > j) continue;
      std::uint64_t c0 =
          cut(i, j, static_cast<std::int64_t>(q.t_begin) - 1);
      std::uint64_t c1 = cut(i, j, q.t_end);
      if (c1 <= c0) continue;
      auto window = seq_.range_report(tau_, tau_ + n_ - 1, c0, c1 - 1);
      for (auto& [sym, b] : window) {
        std::uint64_t a =
            c0 > i ? seq_.range_count(sym, sym, i, c0 - 1) : 0;
        bool hit = false;
        switch (filter) {
          case kActivated: hit = b >= 2 || (b == 1 && (a & 1) == 0); break;
          case kDeactivated: hit = b >= 2 || (b == 1 && (a & 1) == 1); break;
          case kChangedWeak: hit = b >= 1; break;
          case kChangedStrong: hit = b >= 2; break;
        }
        if (hit) out.emplace_back(u, sym - tau_);
      }
    }
    return out;
  }

  std::uint32_t n_ = 0;
  std::uint32_t tau_ = 0;
  std::uint64_t contact_count_ = 0;
  WaveletTree seq_;
  BitVector marks_;
  std::unique_ptr<CasIndex> twin_;
};

}  // namespace tgraph
