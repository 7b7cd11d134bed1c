#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/bitvector.hpp"
#include "tgraph/codecs.hpp"
#include "tgraph/core.hpp"

namespace tgraph {

// Suffix array by prefix doubling; end of string sorts before any extension.
inline std::vector<std::uint32_t> suffix_array(
    std::span<const std::uint32_t> s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (std::size_t i = 0; i < n; ++i) rank[i] = s[i];
  for (std::size_t k = 1; n > 1; k <<= 1) {
    auto cmp = [&](std::uint32_t a, std::uint32_t b) {
      if (rank[a] != rank[b]) return rank[a] < rank[b];
      std::uint64_t ra = a + k < n ? std::uint64_t{rank[a + k]} + 1 : 0;
      std::uint64_t rb = b + k < n ? std::uint64_t{rank[b + k]} + 1 : 0;
      return ra < rb;
    };
    std::sort(sa.begin(), sa.end(), cmp);
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i)
      tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
    rank = tmp;
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// Temporal graph compressed suffix array: contacts become 4-symbol words over
// four disjoint code ranges, the concatenation is suffix-sorted, and only the
// symbol-frequency bitvector D plus the successor array Psi are kept. Psi is
// made cyclic on the deactivation quartile so any suffix of a word wraps
// around to the same contact.
class TgcsaIndex : public TemporalGraphIndex {
 public:
  TgcsaIndex(std::vector<Contact> contacts, std::uint32_t n, std::uint32_t tau,
             bool compress_psi = false)
      : TgcsaIndex(validate(std::move(contacts), n, tau), n, tau, compress_psi,
                   kValidated) {}

  // Code ranges: u in [1, n], v in [n+1, 2n], t_begin in [2n+1, 2n+tau],
  // t_end in [2n+tau+1, 2n+2tau].
  static std::vector<std::uint32_t> encode_contacts(
      const std::vector<Contact>& validated, std::uint32_t n,
      std::uint32_t tau) {
    std::vector<std::uint32_t> out;
    out.reserve(validated.size() * 4);
    for (const Contact& c : validated) {
      out.push_back(c.u + 1);
      out.push_back(n + c.v + 1);
      out.push_back(2 * n + c.t_begin + 1);
      out.push_back(2 * n + tau + c.t_end + 1);
    }
    return out;
  }

  std::string_view name() const override { return "tgcsa"; }
  std::uint32_t vertex_count() const override { return n_; }
  std::uint32_t lifetime() const override { return tau_; }
  std::uint64_t contact_count() const override { return contact_count_; }
  bool psi_compressed() const { return compressed_; }

  std::uint64_t space_bits() const override {
    std::uint64_t bits = d_.size_bits() + 256;
    if (compressed_)
      bits += psi_bytes_.size() * 8 + run_starts_.size_bits() +
              run_off_.size() * 64;
    else
      bits += psi_plain_.size() * 32;
    return bits;
  }

  // 1-based successor array with the cyclic last quartile.
  std::uint32_t psi(std::uint64_t i) const {
    if (!compressed_) return psi_plain_[i - 1];
    std::uint64_t run = run_starts_.rank1(i);
    std::uint64_t start = run_starts_.select1(run);
    std::size_t pos = run_off_[run - 1];
    std::uint64_t value = vint_read(psi_bytes_, pos);
    for (std::uint64_t k = start; k < i; ++k)
      value += vint_read(psi_bytes_, pos);
    return static_cast<std::uint32_t>(value);
  }

  std::uint64_t sequence_length() const { return contact_count_ * 4; }
  const BitVector& frequency_bits() const { return d_; }

  // Code of the suffix at 1-based array position p.
  std::uint32_t symbol_at(std::uint64_t p) const {
    return static_cast<std::uint32_t>(d_.rank1(d_.select0(p)));
  }

  // Suffix positions [lo, hi] whose first code equals `code`; empty when
  // lo > hi.
  std::pair<std::uint64_t, std::uint64_t> code_range(std::uint32_t code) const {
    std::uint64_t lo = d_.rank0(d_.select1(code)) + 1;
    std::uint64_t hi = code < sigma() ? d_.rank0(d_.select1(code + 1))
                                      : sequence_length();
    return {lo, hi};
  }

  std::uint32_t sigma() const { return 2 * n_ + 2 * tau_; }

  bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const override {
    require_vertex(u);
    require_vertex(v);
    require_interval(q);
    auto [lo, hi] = code_range(u + 1);
    for (std::uint64_t k = lo; k <= hi; ++k) {
      std::uint64_t pv = psi(k);
      if (symbol_at(pv) != n_ + v + 1) continue;  // early discard
      std::uint64_t pb = psi(pv);
      Timestamp tb = symbol_at(pb) - 2 * n_ - 1;
      Timestamp te = symbol_at(psi(pb)) - 2 * n_ - tau_ - 1;
      if (contact_matches({u, v, tb, te}, q)) return true;
    }
    return false;
  }

  std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                           Timestamp t) const override {
    require_vertex(u);
    require_vertex(v);
    require_time(t);
    auto [lo, hi] = code_range(u + 1);
    std::optional<Timestamp> best;
    for (std::uint64_t k = lo; k <= hi; ++k) {
      std::uint64_t pv = psi(k);
      if (symbol_at(pv) != n_ + v + 1) continue;
      Timestamp tb = symbol_at(psi(pv)) - 2 * n_ - 1;
      if (tb >= t && (!best || tb < *best)) best = tb;
    }
    return best;
  }

  std::vector<VertexId> neighbors(VertexId u,
                                  const QueryInterval& q) const override {
    require_vertex(u);
    require_interval(q);
    auto [lo, hi] = code_range(u + 1);
    std::vector<VertexId> out;
    for (std::uint64_t k = lo; k <= hi; ++k) {
      std::uint64_t pv = psi(k);
      VertexId v = symbol_at(pv) - n_ - 1;
      std::uint64_t pb = psi(pv);
      Timestamp tb = symbol_at(pb) - 2 * n_ - 1;
      Timestamp te = symbol_at(psi(pb)) - 2 * n_ - tau_ - 1;
      if (contact_matches({u, v, tb, te}, q)) out.push_back(v);
    }
    return dedupe(std::move(out));
  }

  std::vector<VertexId> neighbors_r(VertexId v,
                                    const QueryInterval& q) const override {
    require_vertex(v);
    require_interval(q);
    // Start at the target-code suffixes and walk three steps; the cyclic
    // quartile brings the walk back to the contact's source symbol.
    auto [lo, hi] = code_range(n_ + v + 1);
    std::vector<VertexId> out;
    for (std::uint64_t k = lo; k <= hi; ++k) {
      std::uint64_t pb = psi(k);
      Timestamp tb = symbol_at(pb) - 2 * n_ - 1;
      std::uint64_t pe = psi(pb);
      Timestamp te = symbol_at(pe) - 2 * n_ - tau_ - 1;
      VertexId u = symbol_at(psi(pe)) - 1;
      if (contact_matches({u, v, tb, te}, q)) out.push_back(u);
    }
    return dedupe(std::move(out));
  }

  std::vector<Edge> aggregate(const QueryInterval& q) const override {
    require_interval(q);
    return aggregate_via_neighbors(q);
  }

  std::vector<Edge> activated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    // Contiguous activation-code suffixes for [t_begin, t_end].
    auto [lo, ignored] = code_range(2 * n_ + q.t_begin + 1);
    auto [ignored2, hi] = code_range(2 * n_ + q.t_end + 1);
    (void)ignored;
    (void)ignored2;
    std::vector<Edge> out;
    for (std::uint64_t k = lo; k <= hi; ++k) {
      std::uint64_t pe = psi(k);
      std::uint64_t pu = psi(pe);  // cyclic step to the source symbol
      VertexId u = symbol_at(pu) - 1;
      VertexId v = symbol_at(psi(pu)) - n_ - 1;
      out.emplace_back(u, v);
    }
    return dedupe(std::move(out));
  }

  std::vector<Edge> deactivated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    auto [lo, ignored] = code_range(2 * n_ + tau_ + q.t_begin + 1);
    auto [ignored2, hi] = code_range(2 * n_ + tau_ + q.t_end + 1);
    (void)ignored;
    (void)ignored2;
    std::vector<Edge> out;
    for (std::uint64_t k = lo; k <= hi; ++k) {
      std::uint64_t pu = psi(k);  // cyclic step
      VertexId u = symbol_at(pu) - 1;
      VertexId v = symbol_at(psi(pu)) - n_ - 1;
      out.emplace_back(u, v);
    }
    return dedupe(std::move(out));
  }

  std::vector<Edge> changed_edges(const QueryInterval& q) const override {
    return changed_from_events(q);
  }

  // All suffix positions whose cyclic Psi walk spells out the coded query.
  std::vector<std::uint64_t> match(std::span<const std::uint32_t> codes) const {
    std::vector<std::uint64_t> out;
    if (codes.empty() || contact_count_ == 0) return out;
    auto [lo, hi] = code_range(codes[0]);
    for (std::uint64_t k = lo; k <= hi; ++k) {
      std::uint64_t p = k;
      bool ok = true;
      for (std::size_t step = 1; step < codes.size(); ++step) {
        p = psi(p);
        if (symbol_at(p) != codes[step]) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(k);
    }
    return out;
  }

 private:
  friend class IndexCodec;

  struct ValidatedTag {};
  static constexpr ValidatedTag kValidated{};

  TgcsaIndex() = default;

  TgcsaIndex(const std::vector<Contact>& contacts, std::uint32_t n,
             std::uint32_t tau, bool compress_psi, ValidatedTag)
      : n_(n),
        tau_(tau),
        contact_count_(contacts.size()),
        compressed_(compress_psi) {
    std::vector<std::uint32_t> coded = encode_contacts(contacts, n_, tau_);
    std::vector<std::uint32_t> sa = suffix_array(coded);
    const std::size_t len = coded.size();
    std::vector<std::uint32_t> inverse(len);
    for (std::size_t k = 0; k < len; ++k) inverse[sa[k]] = k;
    std::vector<std::uint32_t> psi(len);
    for (std::size_t k = 0; k < len; ++k) {
      std::uint32_t epos = sa[k];
      std::uint32_t succ = epos % 4 == 3 ? epos - 3 : epos + 1;
      psi[k] = inverse[succ] + 1;
    }

    std::vector<std::uint64_t> freq(sigma() + 1, 0);
    for (std::uint32_t code : coded) freq[code]++;
    BitVectorBuilder d;
    for (std::uint32_t s = 1; s <= sigma(); ++s) {
      d.push_back(true);
      d.append_zeros(freq[s]);
    }
    d_ = d.build();

    if (!compressed_) {
      psi_plain_ = std::move(psi);
    } else {
      BitVectorBuilder runs;
      for (std::size_t k = 0; k < len; ++k) {
        bool starts = k == 0 || psi[k] <= psi[k - 1];
        runs.push_back(starts);
        if (starts) {
          run_off_.push_back(psi_bytes_.size());
          vint_append(psi[k], psi_bytes_);
        } else {
          vint_append(psi[k] - psi[k - 1], psi_bytes_);
        }
      }
      run_starts_ = runs.build();
    }
  }

  static std::vector<VertexId> dedupe(std::vector<VertexId> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  static std::vector<Edge> dedupe(std::vector<Edge> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  std::uint32_t n_ = 0;
  std::uint32_t tau_ = 0;
  std::uint64_t contact_count_ = 0;
  bool compressed_ = false;
  BitVector d_;
  std::vector<std::uint32_t> psi_plain_;
  std::vector<std::uint8_t> psi_bytes_;
  BitVector run_starts_;
  std::vector<std::uint64_t> run_off_;
};

}  // namespace tgraph
