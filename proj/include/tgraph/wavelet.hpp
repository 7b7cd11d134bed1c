#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tgraph/bitvector.hpp"
#include "tgraph/core.hpp"

namespace tgraph {

// Balanced levelwise wavelet tree over symbols in [0, sigma). Sequence
// positions are 1-based; rank takes 0 <= i <= size meaning the length of the
// prefix. Static after construction.
class WaveletTree {
 public:
  using SymbolCount = std::pair<std::uint32_t, std::uint64_t>;

  WaveletTree() = default;

  WaveletTree(std::span<const std::uint32_t> seq, std::uint32_t sigma)
      : size_(seq.size()), sigma_(sigma) {
    for (std::uint32_t s : seq)
      if (s >= sigma_) throw RangeError("symbol outside alphabet");
    levels_ = sigma_ <= 1 ? 0 : std::bit_width(sigma_ - 1);
    std::vector<std::uint32_t> cur(seq.begin(), seq.end());
    bits_.reserve(levels_);
    for (std::uint32_t level = 0; level < levels_; ++level) {
      std::uint32_t shift = levels_ - 1 - level;
      std::vector<bool> level_bits(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i)
        level_bits[i] = (cur[i] >> shift) & 1;
      bits_.emplace_back(level_bits);
      // Children are laid out inside their parent's span, so the next level
      // is the sequence stably ordered by its top level+1 bits.
      std::stable_sort(cur.begin(), cur.end(),
                       [shift](std::uint32_t a, std::uint32_t b) {
                         return (a >> shift) < (b >> shift);
                       });
    }
  }

  std::uint64_t size() const { return size_; }
  std::uint32_t sigma() const { return sigma_; }

  // Symbol at 1-based position i.
  std::uint32_t access(std::uint64_t i) const {
    if (i == 0 || i > size_) throw RangeError("sequence position out of range");
    std::uint64_t b = 0, e = size_, p = i - 1;
    std::uint32_t sym = 0;
    for (std::uint32_t level = 0; level < levels_; ++level) {
      const BitVector& bv = bits_[level];
      bool bit = bv.get(b + p + 1);
      std::uint64_t zeros = bv.rank0(e) - bv.rank0(b);
      if (!bit) {
        p = bv.rank0(b + p) - bv.rank0(b);
        e = b + zeros;
      } else {
        p = bv.rank1(b + p) - bv.rank1(b);
        b = b + zeros;
      }
      sym = (sym << 1) | (bit ? 1u : 0u);
    }
    return sym;
  }

  // Occurrences of symbol in the first i positions.
  std::uint64_t rank(std::uint32_t symbol, std::uint64_t i) const {
    if (i > size_) throw RangeError("rank prefix out of range");
    if (symbol >= sigma_) return 0;
    if (levels_ == 0) return i;
    std::uint64_t b = 0, e = size_, cnt = i;
    for (std::uint32_t level = 0; level < levels_; ++level) {
      const BitVector& bv = bits_[level];
      bool bit = (symbol >> (levels_ - 1 - level)) & 1;
      std::uint64_t zeros = bv.rank0(e) - bv.rank0(b);
      if (!bit) {
        cnt = bv.rank0(b + cnt) - bv.rank0(b);
        e = b + zeros;
      } else {
        cnt = bv.rank1(b + cnt) - bv.rank1(b);
        b = b + zeros;
      }
    }
    return cnt;
  }

  // 1-based position of the f-th occurrence of symbol.
  std::uint64_t select(std::uint32_t symbol, std::uint64_t f) const {
    if (f == 0) throw RangeError("select count must be positive");
    if (symbol >= sigma_) throw NotFoundError("symbol has no occurrences");
    if (levels_ == 0) {
      if (f > size_) throw NotFoundError("occurrence count too large");
      return f;
    }
    std::vector<std::uint64_t> begins(levels_);
    std::uint64_t b = 0, e = size_;
    for (std::uint32_t level = 0; level < levels_; ++level) {
      const BitVector& bv = bits_[level];
      begins[level] = b;
      bool bit = (symbol >> (levels_ - 1 - level)) & 1;
      std::uint64_t zeros = bv.rank0(e) - bv.rank0(b);
      if (!bit)
        e = b + zeros;
      else
        b = b + zeros;
    }
    if (f > e - b) throw NotFoundError("occurrence count too large");
    std::uint64_t pos = f - 1;  // 0-based within leaf
    for (std::uint32_t level = levels_; level-- > 0;) {
      const BitVector& bv = bits_[level];
      std::uint64_t nb = begins[level];
      bool bit = (symbol >> (levels_ - 1 - level)) & 1;
      if (!bit)
        pos = bv.select0(bv.rank0(nb) + pos + 1) - 1 - nb;
      else
        pos = bv.select1(bv.rank1(nb) + pos + 1) - 1 - nb;
    }
    return pos + 1;
  }

  // Number of symbols in [lo, hi] within S[i..j] (1-based inclusive).
  std::uint64_t range_count(std::uint32_t lo, std::uint32_t hi,
                            std::uint64_t i, std::uint64_t j) const {
    check_range(i, j);
    if (lo > hi) throw RangeError("empty symbol interval");
    if (hi >= sigma_) hi = sigma_ - 1;
    if (lo > hi) return 0;
    if (levels_ == 0) return j - i + 1;  // single-symbol alphabet, lo == 0
    return count_rec(0, 0, size_, 0, span_size() - 1, i - 1, j, lo, hi);
  }

  // Per-symbol histogram of S[i..j] restricted to [lo, hi], ascending symbol.
  std::vector<SymbolCount> range_report(std::uint32_t lo, std::uint32_t hi,
                                        std::uint64_t i,
                                        std::uint64_t j) const {
    check_range(i, j);
    if (lo > hi) throw RangeError("empty symbol interval");
    std::vector<SymbolCount> out;
    if (hi >= sigma_) hi = sigma_ - 1;
    if (lo > hi) return out;
    if (levels_ == 0) {
      out.emplace_back(0, j - i + 1);
      return out;
    }
    report_rec(0, 0, size_, 0, span_size() - 1, i - 1, j, lo, hi, out);
    return out;
  }

  // Smallest symbol strictly greater than alpha in S[i..j].
  std::optional<std::uint32_t> range_next_value(std::uint32_t alpha,
                                                std::uint64_t i,
                                                std::uint64_t j) const {
    check_range(i, j);
    if (levels_ == 0) return std::nullopt;  // only symbol 0 <= alpha
    return next_rec(0, 0, size_, 0, span_size() - 1, i - 1, j, alpha);
  }

  // Found symbol plus the 1-based position of its leftmost occurrence in
  // S[i..j].
  std::optional<std::pair<std::uint32_t, std::uint64_t>> range_next_value_pos(
      std::uint32_t alpha, std::uint64_t i, std::uint64_t j) const {
    auto sym = range_next_value(alpha, i, j);
    if (!sym) return std::nullopt;
    std::uint64_t pos = select(*sym, rank(*sym, i - 1) + 1);
    return std::make_pair(*sym, pos);
  }

  // Histogram of symbols s with (s & mask) == value in S[i..j]. Used by the
  // interleaved tree to fix one coordinate of packed tuples.
  std::vector<SymbolCount> masked_report(std::uint32_t mask,
                                         std::uint32_t value, std::uint64_t i,
                                         std::uint64_t j) const {
    check_range(i, j);
    std::vector<SymbolCount> out;
    if (levels_ == 0) {
      if ((0u & mask) == value) out.emplace_back(0, j - i + 1);
      return out;
    }
    masked_rec(0, 0, size_, 0, i - 1, j, mask, value, out);
    return out;
  }

  std::uint64_t size_bits() const {
    std::uint64_t total = 128;
    for (const BitVector& bv : bits_) total += bv.size_bits();
    return total;
  }

  std::uint32_t levels() const { return levels_; }
  const std::vector<BitVector>& level_bits() const { return bits_; }

 private:
  void check_range(std::uint64_t i, std::uint64_t j) const {
    if (i == 0 || i > j || j > size_)
      throw RangeError("sequence range out of bounds");
  }

  std::uint64_t span_size() const { return std::uint64_t{1} << levels_; }

  struct ChildMap {
    std::uint64_t lb, le, lx, ly;  // left node and mapped query range
    std::uint64_t rb, re, rx, ry;  // right node and mapped query range
  };

  ChildMap split(std::uint32_t level, std::uint64_t b, std::uint64_t e,
                 std::uint64_t x, std::uint64_t y) const {
    const BitVector& bv = bits_[level];
    std::uint64_t zb = bv.rank0(b), ze = bv.rank0(e);
    std::uint64_t zx = bv.rank0(x), zy = bv.rank0(y);
    std::uint64_t zeros = ze - zb;
    ChildMap m;
    m.lb = b;
    m.le = b + zeros;
    m.lx = b + (zx - zb);
    m.ly = b + (zy - zb);
    m.rb = b + zeros;
    m.re = e;
    m.rx = b + zeros + (x - zx) - (b - zb);
    m.ry = b + zeros + (y - zy) - (b - zb);
    return m;
  }

  std::uint64_t count_rec(std::uint32_t level, std::uint64_t b, std::uint64_t e,
                          std::uint64_t span_lo, std::uint64_t span_hi,
                          std::uint64_t x, std::uint64_t y, std::uint32_t lo,
                          std::uint32_t hi) const {
    if (x >= y) return 0;
    if (span_hi < lo || span_lo > hi) return 0;
    if (lo <= span_lo && span_hi <= hi) return y - x;
    ChildMap m = split(level, b, e, x, y);
    std::uint64_t mid = span_lo + (span_hi - span_lo) / 2;
    return count_rec(level + 1, m.lb, m.le, span_lo, mid, m.lx, m.ly, lo, hi) +
           count_rec(level + 1, m.rb, m.re, mid + 1, span_hi, m.rx, m.ry, lo,
                     hi);
  }

  void report_rec(std::uint32_t level, std::uint64_t b, std::uint64_t e,
                  std::uint64_t span_lo, std::uint64_t span_hi,
                  std::uint64_t x, std::uint64_t y, std::uint32_t lo,
                  std::uint32_t hi, std::vector<SymbolCount>& out) const {
    if (x >= y) return;
    if (span_hi < lo || span_lo > hi) return;
    if (level == levels_) {
      out.emplace_back(static_cast<std::uint32_t>(span_lo), y - x);
      return;
    }
    ChildMap m = split(level, b, e, x, y);
    std::uint64_t mid = span_lo + (span_hi - span_lo) / 2;
    report_rec(level + 1, m.lb, m.le, span_lo, mid, m.lx, m.ly, lo, hi, out);
    report_rec(level + 1, m.rb, m.re, mid + 1, span_hi, m.rx, m.ry, lo, hi,
               out);
  }

  std::optional<std::uint32_t> next_rec(std::uint32_t level, std::uint64_t b,
                                        std::uint64_t e, std::uint64_t span_lo,
                                        std::uint64_t span_hi, std::uint64_t x,
                                        std::uint64_t y,
                                        std::uint32_t alpha) const {
    if (x >= y) return std::nullopt;
    if (span_hi <= alpha) return std::nullopt;
    if (level == levels_) {
      std::uint64_t sym = span_lo;
      if (sym > alpha && sym < sigma_)
        return static_cast<std::uint32_t>(sym);
      return std::nullopt;
    }
    ChildMap m = split(level, b, e, x, y);
    std::uint64_t mid = span_lo + (span_hi - span_lo) / 2;
    if (auto r = next_rec(level + 1, m.lb, m.le, span_lo, mid, m.lx, m.ly,
                          alpha))
      return r;
    return next_rec(level + 1, m.rb, m.re, mid + 1, span_hi, m.rx, m.ry,
                    alpha);
  }

  void masked_rec(std::uint32_t level, std::uint64_t b, std::uint64_t e,
                  std::uint32_t prefix, std::uint64_t x, std::uint64_t y,
                  std::uint32_t mask, std::uint32_t value,
                  std::vector<SymbolCount>& out) const {
    if (x >= y) return;
    if (level == levels_) {
      if (prefix < sigma_) out.emplace_back(prefix, y - x);
      return;
    }
    ChildMap m = split(level, b, e, x, y);
    std::uint32_t bitpos = levels_ - 1 - level;
    bool constrained = (mask >> bitpos) & 1;
    bool want = (value >> bitpos) & 1;
    if (!constrained || !want)
      masked_rec(level + 1, m.lb, m.le, prefix << 1, m.lx, m.ly, mask, value,
                 out);
    if (!constrained || want)
      masked_rec(level + 1, m.rb, m.re, (prefix << 1) | 1, m.rx, m.ry, mask,
                 value, out);
  }

  friend class IndexCodec;

  WaveletTree(std::uint64_t size, std::uint32_t sigma,
              std::vector<BitVector> bits)
      : size_(size),
        sigma_(sigma),
        levels_(sigma <= 1 ? 0 : std::bit_width(sigma - 1)),
        bits_(std::move(bits)) {}

  std::uint64_t size_ = 0;
  std::uint32_t sigma_ = 0;
  std::uint32_t levels_ = 0;
  std::vector<BitVector> bits_;
};

// Wavelet tree over 2-dimensional symbols (x, y), packed as x * 2^ybits + y
// so that lexicographic tuple order coincides with the scalar code order.
// Fixing either coordinate maps to a masked descent of the scalar tree.
class InterleavedWaveletTree {
 public:
  using Tuple = std::pair<std::uint32_t, std::uint32_t>;
  using TupleCount = std::pair<Tuple, std::uint64_t>;

  InterleavedWaveletTree() = default;

  InterleavedWaveletTree(std::span<const Tuple> seq, std::uint32_t sigma_x,
                         std::uint32_t sigma_y)
      : sigma_x_(sigma_x), sigma_y_(sigma_y) {
    ybits_ = sigma_y_ <= 1 ? 0 : std::bit_width(sigma_y_ - 1);
    std::vector<std::uint32_t> codes;
    codes.reserve(seq.size());
    for (const Tuple& t : seq) {
      if (t.first >= sigma_x_ || t.second >= sigma_y_)
        throw RangeError("tuple outside alphabet");
      codes.push_back(code(t));
    }
    std::uint32_t sigma = sigma_x_ == 0 ? 0 : code({sigma_x_ - 1, sigma_y_ - 1}) + 1;
    wt_ = WaveletTree(codes, sigma);
  }

  std::uint64_t size() const { return wt_.size(); }
  std::uint32_t sigma_x() const { return sigma_x_; }
  std::uint32_t sigma_y() const { return sigma_y_; }

  Tuple access(std::uint64_t i) const { return decode(wt_.access(i)); }

  std::uint64_t rank(const Tuple& t, std::uint64_t i) const {
    if (t.first >= sigma_x_ || t.second >= sigma_y_) {
      if (i > wt_.size()) throw RangeError("rank prefix out of range");
      return 0;
    }
    return wt_.rank(code(t), i);
  }

  std::uint64_t select(const Tuple& t, std::uint64_t f) const {
    if (t.first >= sigma_x_ || t.second >= sigma_y_)
      throw NotFoundError("tuple has no occurrences");
    return wt_.select(code(t), f);
  }

  // Tuples between lo and hi in lexicographic order.
  std::uint64_t range_count(const Tuple& lo, const Tuple& hi, std::uint64_t i,
                            std::uint64_t j) const {
    check_range(i, j);
    auto l = lo_code(lo);
    std::uint32_t h = hi_code(hi);
    if (!l || *l > h) return 0;
    return wt_.range_count(*l, h, i, j);
  }

  std::vector<TupleCount> range_report(const Tuple& lo, const Tuple& hi,
                                       std::uint64_t i, std::uint64_t j) const {
    check_range(i, j);
    auto l = lo_code(lo);
    std::uint32_t h = hi_code(hi);
    if (!l || *l > h) return {};
    return decode_counts(wt_.range_report(*l, h, i, j));
  }

  std::optional<Tuple> range_next_value(const Tuple& alpha, std::uint64_t i,
                                        std::uint64_t j) const {
    check_range(i, j);
    if (alpha.first >= sigma_x_) return std::nullopt;
    std::uint32_t a = alpha.second >= sigma_y_
                          ? (alpha.first << ybits_) | y_mask()
                          : code(alpha);
    auto r = wt_.range_next_value(a, i, j);
    if (!r) return std::nullopt;
    return decode(*r);
  }

  std::optional<std::pair<Tuple, std::uint64_t>> range_next_value_pos(
      const Tuple& alpha, std::uint64_t i, std::uint64_t j) const {
    auto sym = range_next_value(alpha, i, j);
    if (!sym) return std::nullopt;
    std::uint64_t pos = wt_.select(code(*sym), wt_.rank(code(*sym), i - 1) + 1);
    return std::make_pair(*sym, pos);
  }

  // Histogram of second coordinates among tuples (x, *) in S[i..j].
  std::vector<WaveletTree::SymbolCount> report_fixed_first(
      std::uint32_t x, std::uint64_t i, std::uint64_t j) const {
    std::vector<WaveletTree::SymbolCount> out;
    if (x >= sigma_x_) {
      // Still validate the positions.
      (void)wt_.range_count(0, 0, i, j);
      return out;
    }
    std::uint32_t lo = code({x, 0});
    std::uint32_t hi = code({x, sigma_y_ - 1});
    for (auto& [sym, cnt] : wt_.range_report(lo, hi, i, j))
      out.emplace_back(sym & ((1u << ybits_) - 1), cnt);
    return out;
  }

  // Histogram of first coordinates among tuples (*, y) in S[i..j].
  std::vector<WaveletTree::SymbolCount> report_fixed_second(
      std::uint32_t y, std::uint64_t i, std::uint64_t j) const {
    std::vector<WaveletTree::SymbolCount> out;
    if (y >= sigma_y_) {
      (void)wt_.range_count(0, 0, i, j);
      return out;
    }
    std::uint32_t mask = ybits_ == 0 ? 0 : (1u << ybits_) - 1;
    for (auto& [sym, cnt] : wt_.masked_report(mask, y, i, j))
      out.emplace_back(sym >> ybits_, cnt);
    return out;
  }

  std::vector<TupleCount> full_report(std::uint64_t i, std::uint64_t j) const {
    return decode_counts(wt_.masked_report(0, 0, i, j));
  }

  std::uint64_t size_bits() const { return wt_.size_bits() + 64; }

 private:
  std::uint32_t code(const Tuple& t) const {
    return (t.first << ybits_) | t.second;
  }

  std::uint32_t y_mask() const {
    return ybits_ == 0 ? 0 : (1u << ybits_) - 1;
  }

  void check_range(std::uint64_t i, std::uint64_t j) const {
    if (i == 0 || i > j || j > wt_.size())
      throw RangeError("sequence range out of bounds");
  }

  // Code of the smallest representable tuple >= t, if any.
  std::optional<std::uint32_t> lo_code(Tuple t) const {
    if (t.second >= sigma_y_) {
      t.first += 1;
      t.second = 0;
    }
    if (t.first >= sigma_x_) return std::nullopt;
    return code(t);
  }

  // Code of the largest representable tuple <= t.
  std::uint32_t hi_code(Tuple t) const {
    if (t.second >= sigma_y_) t.second = sigma_y_ - 1;
    if (t.first >= sigma_x_) {
      t.first = sigma_x_ - 1;
      t.second = sigma_y_ - 1;
    }
    return code(t);
  }

  Tuple decode(std::uint32_t c) const {
    return {c >> ybits_, c & ((ybits_ == 0 ? 0 : (1u << ybits_) - 1))};
  }

  std::vector<TupleCount> decode_counts(
      std::vector<WaveletTree::SymbolCount> raw) const {
    std::vector<TupleCount> out;
    out.reserve(raw.size());
    for (auto& [sym, cnt] : raw) out.emplace_back(decode(sym), cnt);
    return out;
  }

  friend class IndexCodec;

  InterleavedWaveletTree(std::uint32_t sigma_x, std::uint32_t sigma_y,
                         WaveletTree wt)
      : sigma_x_(sigma_x),
        sigma_y_(sigma_y),
        ybits_(sigma_y <= 1 ? 0 : std::bit_width(sigma_y - 1)),
        wt_(std::move(wt)) {}

  std::uint32_t sigma_x_ = 0;
  std::uint32_t sigma_y_ = 0;
  std::uint32_t ybits_ = 0;
  WaveletTree wt_;
};

}  // namespace tgraph
