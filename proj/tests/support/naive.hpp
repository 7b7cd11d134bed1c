#pragma once

// Test-only reference implementations: plain scans and tensors kept
// deliberately independent of the library's query paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tgraph/core.hpp"

namespace naive {

using tgraph::Contact;
using tgraph::Timestamp;
using tgraph::VertexId;

// --- sequence scans (wavelet oracle) ---------------------------------------

inline std::uint64_t rank(const std::vector<std::uint32_t>& s,
                          std::uint32_t sym, std::uint64_t i) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < i; ++k) count += s[k] == sym;
  return count;
}

inline std::optional<std::uint64_t> select(const std::vector<std::uint32_t>& s,
                                           std::uint32_t sym,
                                           std::uint64_t f) {
  std::uint64_t seen = 0;
  for (std::uint64_t k = 0; k < s.size(); ++k)
    if (s[k] == sym && ++seen == f) return k + 1;
  return std::nullopt;
}

inline std::uint64_t range_count(const std::vector<std::uint32_t>& s,
                                 std::uint32_t lo, std::uint32_t hi,
                                 std::uint64_t i, std::uint64_t j) {
  std::uint64_t count = 0;
  for (std::uint64_t k = i; k <= j; ++k)
    count += s[k - 1] >= lo && s[k - 1] <= hi;
  return count;
}

inline std::vector<std::pair<std::uint32_t, std::uint64_t>> range_report(
    const std::vector<std::uint32_t>& s, std::uint32_t lo, std::uint32_t hi,
    std::uint64_t i, std::uint64_t j) {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (std::uint64_t k = i; k <= j; ++k)
    if (s[k - 1] >= lo && s[k - 1] <= hi) hist[s[k - 1]]++;
  return {hist.begin(), hist.end()};
}

inline std::optional<std::pair<std::uint32_t, std::uint64_t>> range_next_value(
    const std::vector<std::uint32_t>& s, std::uint32_t alpha, std::uint64_t i,
    std::uint64_t j) {
  std::optional<std::uint32_t> best;
  for (std::uint64_t k = i; k <= j; ++k)
    if (s[k - 1] > alpha && (!best || s[k - 1] < *best)) best = s[k - 1];
  if (!best) return std::nullopt;
  for (std::uint64_t k = i; k <= j; ++k)
    if (s[k - 1] == *best) return std::make_pair(*best, k);
  return std::nullopt;
}

// --- suffix array by direct comparison --------------------------------------

inline std::vector<std::uint32_t> suffix_array_by_sort(
    const std::vector<std::uint32_t>& s) {
  std::vector<std::uint32_t> sa(s.size());
  for (std::uint32_t k = 0; k < sa.size(); ++k) sa[k] = k;
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    while (a < s.size() && b < s.size()) {
      if (s[a] != s[b]) return s[a] < s[b];
      ++a;
      ++b;
    }
    return a > b;  // shorter suffix first
  });
  return sa;
}

// --- boolean tensor ----------------------------------------------------------

template <unsigned D>
struct Tensor {
  std::set<std::array<std::uint32_t, D>> ones;

  bool point(const std::array<std::uint32_t, D>& p) const {
    return ones.count(p) > 0;
  }

  std::vector<std::array<std::uint32_t, D>> range(
      const std::array<std::uint32_t, D>& lo,
      const std::array<std::uint32_t, D>& hi) const {
    std::vector<std::array<std::uint32_t, D>> out;
    for (const auto& p : ones) {
      bool inside = true;
      for (unsigned d = 0; d < D; ++d)
        inside = inside && p[d] >= lo[d] && p[d] <= hi[d];
      if (inside) out.push_back(p);
    }
    return out;
  }
};

// --- random temporal graphs ---------------------------------------------------

// Valid contact sets that exercise touching intervals (deactivation and
// reactivation at the same timestamp).
inline std::vector<Contact> random_contacts(std::uint32_t n, std::uint32_t tau,
                                            std::uint64_t target,
                                            std::mt19937_64& rng) {
  std::vector<Contact> out;
  if (n == 0 || tau < 2) return out;
  std::map<std::pair<VertexId, VertexId>, Timestamp> last_end;
  std::uniform_int_distribution<std::uint32_t> pick_vertex(0, n - 1);
  for (std::uint64_t attempt = 0; attempt < target * 4 && out.size() < target;
       ++attempt) {
    VertexId u = pick_vertex(rng);
    VertexId v = pick_vertex(rng);
    auto key = std::make_pair(u, v);
    Timestamp start;
    auto it = last_end.find(key);
    if (it == last_end.end()) {
      start = rng() % tau;
    } else {
      // Touch the previous interval now and then.
      start = it->second + (rng() % 3 == 0 ? 0 : 1 + rng() % 3);
    }
    Timestamp length = 1 + rng() % 4;
    if (start + length >= tau) continue;
    out.push_back({u, v, start, start + length});
    last_end[key] = start + length;
  }
  return out;
}

}  // namespace naive
