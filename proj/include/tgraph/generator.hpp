#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tgraph/core.hpp"

namespace tgraph {

// Uniform contact generator: edges are drawn uniformly among those with
// remaining capacity, then each edge's activation intervals come from a
// sorted sample of distinct timestamps paired off left to right. Every edge
// fits at most floor(tau / 2) contacts, so feasibility is n * n * (tau / 2).
inline std::vector<Contact> generate_uniform(std::uint32_t n, std::uint32_t tau,
                                             std::uint64_t contacts,
                                             std::uint64_t seed) {
  std::uint64_t per_edge = tau / 2;
  std::uint64_t capacity = std::uint64_t{n} * n * per_edge;
  if (contacts > capacity)
    throw InfeasibleParametersError(
        "requested contact count exceeds n*n*(tau/2)");
  std::mt19937_64 rng(seed);

  // Contacts per edge, one uniform draw at a time over non-full edges.
  std::vector<std::uint32_t> edge_count(std::size_t{n} * n, 0);
  std::vector<std::uint32_t> open;  // edge ids with remaining capacity
  open.reserve(edge_count.size());
  for (std::uint32_t e = 0; e < edge_count.size(); ++e) open.push_back(e);
  for (std::uint64_t k = 0; k < contacts; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    std::size_t slot = pick(rng);
    std::uint32_t e = open[slot];
    if (++edge_count[e] == per_edge) {
      open[slot] = open.back();
      open.pop_back();
    }
  }

  std::vector<Contact> out;
  out.reserve(contacts);
  std::vector<std::uint32_t> sample;
  for (std::uint32_t e = 0; e < edge_count.size(); ++e) {
    std::uint32_t k = edge_count[e];
    if (k == 0) continue;
    // Distinct sorted timestamps, 2k of them: Floyd's sampling.
    sample.clear();
    for (std::uint32_t r = tau - 2 * k; r < tau; ++r) {
      std::uniform_int_distribution<std::uint32_t> pick(0, r);
      std::uint32_t t = pick(rng);
      bool dup = false;
      for (std::uint32_t s : sample) dup |= s == t;
      sample.push_back(dup ? r : t);
    }
    std::sort(sample.begin(), sample.end());
    VertexId u = e / n, v = e % n;
    for (std::uint32_t j = 0; j < k; ++j)
      out.push_back({u, v, sample[2 * j], sample[2 * j + 1]});
  }
  return out;
}

}  // namespace tgraph
