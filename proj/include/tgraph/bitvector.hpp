#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "tgraph/core.hpp"

namespace tgraph {

// Plain bitvector with a sampled rank directory. rank is O(1) apart from a
// bounded popcount scan inside one superblock; select binary-searches the
// directory. Positions in the public API are 1-based, matching the usual
// rank/select convention; rank(b, 0) = 0.
class BitVector {
 public:
  static constexpr std::uint64_t kSuperBits = 512;  // 8 words per superblock

  BitVector() = default;

  explicit BitVector(const std::vector<bool>& bits) {
    words_.assign((bits.size() + 63) / 64, 0);
    size_ = bits.size();
    for (std::uint64_t i = 0; i < bits.size(); ++i)
      if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    build_directory();
  }

  BitVector(std::vector<std::uint64_t> words, std::uint64_t size)
      : words_(std::move(words)), size_(size) {
    words_.resize((size_ + 63) / 64);
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    build_directory();
  }

  std::uint64_t size() const { return size_; }
  std::uint64_t ones() const { return ones_; }
  std::uint64_t zeros() const { return size_ - ones_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  // Bit at 1-based position i.
  bool get(std::uint64_t i) const {
    if (i == 0 || i > size_) throw RangeError("bitvector position out of range");
    return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1;
  }

  // Number of one bits among the first i positions, 0 <= i <= size.
  std::uint64_t rank1(std::uint64_t i) const {
    if (i > size_) throw RangeError("bitvector rank position out of range");
    std::uint64_t super = i / kSuperBits;
    std::uint64_t count = super_[super];
    std::uint64_t word = super * (kSuperBits / 64);
    std::uint64_t end_word = i >> 6;
    for (; word < end_word; ++word) count += std::popcount(words_[word]);
    if (i & 63)
      count += std::popcount(words_[end_word] &
                             ((std::uint64_t{1} << (i & 63)) - 1));
    return count;
  }

  std::uint64_t rank0(std::uint64_t i) const { return i - rank1(i); }

  std::uint64_t rank(bool bit, std::uint64_t i) const {
    return bit ? rank1(i) : rank0(i);
  }

  // 1-based position of the c-th one bit, 1 <= c <= ones().
  std::uint64_t select1(std::uint64_t c) const {
    if (c == 0 || c > ones_)
      throw NotFoundError("bitvector select1 count out of range");
    // Last superblock whose prefix count is < c.
    std::uint64_t lo = 0, hi = super_.size() - 1;
    while (lo < hi) {
      std::uint64_t mid = (lo + hi + 1) / 2;
      if (super_[mid] < c) lo = mid; else hi = mid - 1;
    }
    std::uint64_t remaining = c - super_[lo];
    std::uint64_t word = lo * (kSuperBits / 64);
    for (;; ++word) {
      std::uint64_t pc = std::popcount(words_[word]);
      if (pc >= remaining) break;
      remaining -= pc;
    }
    return word * 64 + select_in_word(words_[word], remaining) + 1;
  }

  std::uint64_t select0(std::uint64_t c) const {
    if (c == 0 || c > zeros())
      throw NotFoundError("bitvector select0 count out of range");
    std::uint64_t lo = 0, hi = super_.size() - 1;
    while (lo < hi) {
      std::uint64_t mid = (lo + hi + 1) / 2;
      if (mid * kSuperBits - super_[mid] < c) lo = mid; else hi = mid - 1;
    }
    std::uint64_t remaining = c - (lo * kSuperBits - super_[lo]);
    std::uint64_t word = lo * (kSuperBits / 64);
    for (;; ++word) {
      std::uint64_t pc = std::popcount(~words_[word]);
      if (word == words_.size() - 1 && (size_ & 63))
        pc = std::popcount(~words_[word] &
                           ((std::uint64_t{1} << (size_ & 63)) - 1));
      if (pc >= remaining) break;
      remaining -= pc;
    }
    return word * 64 + select_in_word(~words_[word], remaining) + 1;
  }

  std::uint64_t select(bool bit, std::uint64_t c) const {
    return bit ? select1(c) : select0(c);
  }

  std::uint64_t size_bits() const {
    return words_.size() * 64 + super_.size() * 64 + 128;
  }

 private:
  void build_directory() {
    std::uint64_t supers = size_ / kSuperBits + 1;
    super_.assign(supers, 0);
    std::uint64_t count = 0, w = 0;
    for (std::uint64_t k = 0; k < supers; ++k) {
      super_[k] = count;
      std::uint64_t end =
          std::min<std::uint64_t>(words_.size(), (k + 1) * (kSuperBits / 64));
      for (; w < end; ++w) count += std::popcount(words_[w]);
    }
    for (; w < words_.size(); ++w) count += std::popcount(words_[w]);
    ones_ = count;
  }

  // 0-based position of the r-th set bit of w, 1 <= r <= popcount(w).
  static std::uint32_t select_in_word(std::uint64_t w, std::uint64_t r) {
    for (std::uint64_t k = 1;; ++k) {
      std::uint32_t bit = std::countr_zero(w);
      if (k == r) return bit;
      w &= w - 1;
    }
  }

  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> super_;  // rank1 before each superblock
  std::uint64_t size_ = 0;
  std::uint64_t ones_ = 0;
};

// Convenience builder used by structures that emit bits left to right.
class BitVectorBuilder {
 public:
  void push_back(bool bit) { bits_.push_back(bit); }
  void append_ones(std::uint64_t k) { bits_.insert(bits_.end(), k, true); }
  void append_zeros(std::uint64_t k) { bits_.insert(bits_.end(), k, false); }
  std::uint64_t size() const { return bits_.size(); }

  BitVector build() const { return BitVector(bits_); }

 private:
  std::vector<bool> bits_;
};

}  // namespace tgraph
