#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/core.hpp"

namespace tgraph {

// --- varint ----------------------------------------------------------------
//
// Little-endian base-128: each byte carries 7 payload bits, least significant
// group first; the high bit is set on every byte except the last.

inline void vint_append(std::uint64_t value, std::vector<std::uint8_t>& out) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value) | 0x80);
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

inline std::vector<std::uint8_t> vint_encode(std::uint64_t value) {
  std::vector<std::uint8_t> out;
  vint_append(value, out);
  return out;
}

inline std::uint64_t vint_read(std::span<const std::uint8_t> bytes,
                               std::size_t& pos) {
  std::uint64_t value = 0;
  for (unsigned shift = 0; shift < 64; shift += 7) {
    if (pos >= bytes.size()) throw DecodingError("truncated varint");
    std::uint8_t b = bytes[pos++];
    value |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if ((b & 0x80) == 0) return value;
  }
  throw DecodingError("varint too long");
}

inline std::uint64_t vint_decode(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  std::uint64_t v = vint_read(bytes, pos);
  if (pos != bytes.size()) throw DecodingError("trailing bytes after varint");
  return v;
}

// --- DeltaGap ---------------------------------------------------------------

// Strictly increasing list stored as its first element plus the gaps between
// consecutive elements. The first element is kept so decoding needs no outside
// context.
struct DeltaStream {
  std::optional<std::uint64_t> first;
  std::vector<std::uint64_t> gaps;

  bool empty() const { return !first.has_value(); }
};

inline DeltaStream deltagap_encode(std::span<const std::uint64_t> values) {
  DeltaStream out;
  if (values.empty()) return out;
  out.first = values[0];
  out.gaps.reserve(values.size() - 1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1])
      throw EncodingError("delta-gap input must be strictly increasing");
    out.gaps.push_back(values[i] - values[i - 1]);
  }
  return out;
}

inline std::vector<std::uint64_t> deltagap_decode(const DeltaStream& stream) {
  std::vector<std::uint64_t> out;
  if (stream.empty()) return out;
  out.reserve(stream.gaps.size() + 1);
  std::uint64_t cur = *stream.first;
  out.push_back(cur);
  for (std::uint64_t gap : stream.gaps) {
    if (gap == 0) throw DecodingError("delta-gap stream holds a zero gap");
    cur += gap;
    out.push_back(cur);
  }
  return out;
}

// Byte layout used by the index structures: varint count, then the varint
// first element and varint gaps.
inline void deltagap_append(std::span<const std::uint64_t> values,
                            std::vector<std::uint8_t>& out) {
  DeltaStream stream = deltagap_encode(values);
  vint_append(values.size(), out);
  if (stream.empty()) return;
  vint_append(*stream.first, out);
  for (std::uint64_t gap : stream.gaps) vint_append(gap, out);
}

inline std::vector<std::uint64_t> deltagap_read(
    std::span<const std::uint8_t> bytes, std::size_t& pos) {
  std::uint64_t count = vint_read(bytes, pos);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::uint64_t cur = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t delta = vint_read(bytes, pos);
    if (k == 0)
      cur = delta;
    else {
      if (delta == 0) throw DecodingError("delta-gap stream holds a zero gap");
      cur += delta;
    }
    out.push_back(cur);
  }
  return out;
}

// Non-decreasing lists (event timestamps, interval boundaries of touching
// contacts) are skewed by their index so repeats become strictly increasing:
// x_k + k round-trips through the plain delta-gap form.
inline void nondecreasing_append(std::span<const std::uint64_t> values,
                                 std::vector<std::uint8_t>& out) {
  std::vector<std::uint64_t> skewed(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) skewed[k] = values[k] + k;
  deltagap_append(skewed, out);
}

inline std::vector<std::uint64_t> nondecreasing_read(
    std::span<const std::uint8_t> bytes, std::size_t& pos) {
  std::vector<std::uint64_t> values = deltagap_read(bytes, pos);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < k) throw DecodingError("skewed stream underflows");
    values[k] -= k;
  }
  return values;
}

// --- End-Tagged Dense Codes ---------------------------------------------
//
// Byte-aligned dense codes ranked by descending frequency. A code is a
// base-128 number written most significant digit first; the final byte has
// its high bit set (the end tag), all other bytes stay below 0x80. The 128
// most frequent symbols get one byte, the next 128^2 two bytes, and so on.
class EtdcDictionary {
 public:
  EtdcDictionary() = default;

  // frequencies: (symbol, count) pairs; ties broken by symbol id so builds
  // are deterministic.
  static EtdcDictionary build(
      std::vector<std::pair<std::uint32_t, std::uint64_t>> frequencies) {
    if (frequencies.empty())
      throw ValidationError("frequency table must not be empty");
    std::sort(frequencies.begin(), frequencies.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    EtdcDictionary dict;
    dict.rank_to_symbol_.reserve(frequencies.size());
    for (auto& [symbol, count] : frequencies) {
      (void)count;
      if (symbol >= dict.symbol_to_rank_.size())
        dict.symbol_to_rank_.resize(symbol + 1, kAbsent);
      if (dict.symbol_to_rank_[symbol] != kAbsent)
        throw ValidationError("duplicate symbol in frequency table");
      dict.symbol_to_rank_[symbol] =
          static_cast<std::uint32_t>(dict.rank_to_symbol_.size());
      dict.rank_to_symbol_.push_back(symbol);
    }
    return dict;
  }

  // Rebuild from the rank-ordered symbol list (serialization path).
  static EtdcDictionary from_ranks(std::vector<std::uint32_t> rank_to_symbol) {
    EtdcDictionary dict;
    for (std::uint32_t symbol : rank_to_symbol) {
      if (symbol >= dict.symbol_to_rank_.size())
        dict.symbol_to_rank_.resize(symbol + 1, kAbsent);
      dict.symbol_to_rank_[symbol] =
          static_cast<std::uint32_t>(dict.rank_to_symbol_.size());
      dict.rank_to_symbol_.push_back(symbol);
    }
    return dict;
  }

  std::size_t symbol_count() const { return rank_to_symbol_.size(); }

  void encode(std::uint32_t symbol, std::vector<std::uint8_t>& out) const {
    std::uint64_t rank = rank_of(symbol);
    // Find the code length: ranks [base, base + 128^len) take len bytes.
    std::uint64_t base = 0, block = 128;
    unsigned len = 1;
    while (rank >= base + block) {
      base += block;
      block *= 128;
      ++len;
    }
    std::uint64_t offset = rank - base;
    std::uint8_t bytes[10];
    bytes[len - 1] = static_cast<std::uint8_t>(offset % 128) | 0x80;
    offset /= 128;
    for (unsigned k = len - 1; k-- > 0;) {
      bytes[k] = static_cast<std::uint8_t>(offset % 128);
      offset /= 128;
    }
    out.insert(out.end(), bytes, bytes + len);
  }

  std::uint32_t decode(std::span<const std::uint8_t> bytes,
                       std::size_t& pos) const {
    std::uint64_t offset = 0;
    unsigned len = 0;
    for (;;) {
      if (pos >= bytes.size()) throw DecodingError("truncated ETDC code");
      std::uint8_t b = bytes[pos++];
      ++len;
      offset = offset * 128 + (b & 0x7f);
      if (b & 0x80) break;
      if (len > 9) throw DecodingError("ETDC code too long");
    }
    std::uint64_t base = 0, block = 128;
    for (unsigned k = 1; k < len; ++k) {
      base += block;
      block *= 128;
    }
    std::uint64_t rank = base + offset;
    if (rank >= rank_to_symbol_.size())
      throw DecodingError("ETDC code outside dictionary");
    return rank_to_symbol_[rank];
  }

  unsigned code_length(std::uint32_t symbol) const {
    std::uint64_t rank = rank_of(symbol);
    std::uint64_t base = 0, block = 128;
    unsigned len = 1;
    while (rank >= base + block) {
      base += block;
      block *= 128;
      ++len;
    }
    return len;
  }

  std::uint64_t size_bits() const {
    return rank_to_symbol_.size() * 32 + symbol_to_rank_.size() * 32 + 64;
  }

  const std::vector<std::uint32_t>& rank_to_symbol() const {
    return rank_to_symbol_;
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;

  std::uint64_t rank_of(std::uint32_t symbol) const {
    if (symbol >= symbol_to_rank_.size() || symbol_to_rank_[symbol] == kAbsent)
      throw UnknownSymbolError("symbol missing from ETDC dictionary");
    return symbol_to_rank_[symbol];
  }

  std::vector<std::uint32_t> rank_to_symbol_;
  std::vector<std::uint32_t> symbol_to_rank_;
};

}  // namespace tgraph
