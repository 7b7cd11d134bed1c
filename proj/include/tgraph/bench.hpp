#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgraph/io.hpp"

namespace tgraph {

inline constexpr const char* kQueryClassNames[8] = {
    "has_edge",      "next_activation",   "neighbors",
    "neighbors_r",   "aggregate",         "activated_edges",
    "deactivated_edges", "changed_edges"};

// One pre-generated query; which fields matter depends on the class.
struct BenchQuery {
  VertexId u = 0;
  VertexId v = 0;
  QueryInterval q;
};

struct Workload {
  std::uint64_t seed = 0;
  std::uint64_t queries_per_class = 0;
  // workload[class][k]
  std::array<std::vector<BenchQuery>, 8> queries;
};

inline Workload make_workload(std::uint32_t n, std::uint32_t tau,
                              std::uint64_t queries_per_class,
                              std::uint64_t seed) {
  Workload w;
  w.seed = seed;
  w.queries_per_class = queries_per_class;
  if (n == 0 || tau == 0) return w;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_vertex(0, n - 1);
  std::uniform_int_distribution<std::uint32_t> pick_time(0, tau - 1);
  auto pick_interval = [&](bool allow_strong) {
    Timestamp a = pick_time(rng), b = pick_time(rng);
    if (a > b) std::swap(a, b);
    std::uint32_t max_kind = allow_strong ? 2 : 1;
    std::uint32_t kind =
        std::uniform_int_distribution<std::uint32_t>(0, max_kind)(rng);
    if (kind == 0) return QueryInterval::point(a);
    if (kind == 1) return QueryInterval::weak(a, b);
    return QueryInterval::strong(a, b);
  };
  for (unsigned cls = 0; cls < 8; ++cls) {
    bool strong_ok = cls != 5 && cls != 6;  // activated/deactivated: weak only
    auto& out = w.queries[cls];
    out.reserve(queries_per_class);
    for (std::uint64_t k = 0; k < queries_per_class; ++k) {
      BenchQuery bq;
      bq.u = pick_vertex(rng);
      bq.v = pick_vertex(rng);
      bq.q = pick_interval(strong_ok);
      out.push_back(bq);
    }
  }
  return w;
}

// FNV-1a over the query results; identical across structures when the
// answers agree.
class ResultHash {
 public:
  void mix(std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      hash_ ^= (x >> (8 * k)) & 0xff;
      hash_ *= 0x100000001b3ull;
    }
  }
  void mix_bool(bool b) { mix(b ? 1 : 2); }
  template <class T>
  void mix_list(const std::vector<T>& xs) {
    mix(xs.size());
    for (const T& x : xs) {
      if constexpr (std::is_same_v<T, Edge>) {
        mix(x.first);
        mix(x.second);
      } else {
        mix(x);
      }
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

inline std::uint64_t run_query_class(const TemporalGraphIndex& index,
                                     unsigned cls,
                                     const std::vector<BenchQuery>& queries,
                                     std::vector<double>* latencies_us) {
  ResultHash hash;
  for (const BenchQuery& bq : queries) {
    auto start = std::chrono::steady_clock::now();
    switch (cls) {
      case 0: hash.mix_bool(index.has_edge(bq.u, bq.v, bq.q)); break;
      case 1: {
        auto r = index.next_activation(bq.u, bq.v, bq.q.t_begin);
        hash.mix(r ? *r + 1 : 0);
        break;
      }
      case 2: hash.mix_list(index.neighbors(bq.u, bq.q)); break;
      case 3: hash.mix_list(index.neighbors_r(bq.v, bq.q)); break;
      case 4: hash.mix_list(index.aggregate(bq.q)); break;
      case 5: hash.mix_list(index.activated_edges(bq.q)); break;
      case 6: hash.mix_list(index.deactivated_edges(bq.q)); break;
      case 7: hash.mix_list(index.changed_edges(bq.q)); break;
    }
    auto stop = std::chrono::steady_clock::now();
    if (latencies_us)
      latencies_us->push_back(
          std::chrono::duration<double, std::micro>(stop - start).count());
  }
  return hash.value();
}

inline double percentile(std::vector<double> xs, double p) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  double rank = p * (xs.size() - 1);
  std::size_t lo = static_cast<std::size_t>(rank);
  std::size_t hi = std::min(lo + 1, xs.size() - 1);
  double frac = rank - lo;
  return xs[lo] * (1 - frac) + xs[hi] * frac;
}

struct BenchOptions {
  std::vector<StructureKind> structures;
  std::uint64_t queries_per_class = 100;
  std::uint64_t seed = 42;
  bool include_timings = true;
  bool with_oracle_check = true;
};

inline std::vector<StructureKind> all_structures() {
  return {StructureKind::kEdgeLog, StructureKind::kEveLog, StructureKind::kCas,
          StructureKind::kCet,     StructureKind::kTgcsa,  StructureKind::kCkd};
}

inline nlohmann::json run_bench(const ContactLog& log,
                                const BenchOptions& opt) {
  using clock = std::chrono::steady_clock;
  std::vector<Edge> edges;
  for (const Contact& c : log.contacts) edges.emplace_back(c.u, c.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  nlohmann::json report;
  report["graph"] = {{"n", log.n},
                     {"tau", log.tau},
                     {"contacts", log.contacts.size()},
                     {"edges", edges.size()}};
  Workload workload =
      make_workload(log.n, log.tau, opt.queries_per_class, opt.seed);
  report["workload"] = {{"seed", opt.seed},
                        {"queries_per_class", opt.queries_per_class}};

  std::array<std::uint64_t, 8> oracle_hash{};
  std::unique_ptr<TemporalGraphIndex> oracle;
  if (opt.with_oracle_check) {
    oracle = build_index(StructureKind::kOracle, log.contacts, log.n, log.tau);
    for (unsigned cls = 0; cls < 8; ++cls)
      oracle_hash[cls] =
          run_query_class(*oracle, cls, workload.queries[cls], nullptr);
  }

  bool agreement = true;
  report["structures"] = nlohmann::json::array();
  for (StructureKind kind : opt.structures) {
    auto build_start = clock::now();
    std::unique_ptr<TemporalGraphIndex> index =
        build_index(kind, log.contacts, log.n, log.tau);
    double build_ms = std::chrono::duration<double, std::milli>(
                          clock::now() - build_start)
                          .count();
    nlohmann::json row;
    row["name"] = to_string(kind);
    row["space_bits"] = index->space_bits();
    row["bits_per_contact"] =
        log.contacts.empty()
            ? 0.0
            : static_cast<double>(index->space_bits()) / log.contacts.size();
    if (opt.include_timings) row["build_ms"] = build_ms;
    nlohmann::json classes;
    for (unsigned cls = 0; cls < 8; ++cls) {
      // Warmup pass, then the timed pass.
      (void)run_query_class(*index, cls, workload.queries[cls], nullptr);
      std::vector<double> lat;
      std::uint64_t hash =
          run_query_class(*index, cls, workload.queries[cls], &lat);
      nlohmann::json cell;
      cell["count"] = workload.queries[cls].size();
      cell["checksum"] = hash;
      if (opt.with_oracle_check) {
        bool ok = hash == oracle_hash[cls];
        cell["matches_oracle"] = ok;
        agreement = agreement && ok;
      }
      if (opt.include_timings) {
        cell["p50_us"] = percentile(lat, 0.50);
        cell["p99_us"] = percentile(lat, 0.99);
      }
      classes[kQueryClassNames[cls]] = cell;
    }
    row["queries"] = classes;
    report["structures"].push_back(row);
  }
  if (opt.with_oracle_check) report["agreement"] = agreement;
  return report;
}

// Plain-text stats table: per structure space and build time.
inline std::string format_stats(const ContactLog& log,
                                const std::vector<StructureKind>& kinds) {
  using clock = std::chrono::steady_clock;
  std::vector<Edge> edges;
  for (const Contact& c : log.contacts) edges.emplace_back(c.u, c.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::string out;
  out += "n=" + std::to_string(log.n) + " tau=" + std::to_string(log.tau) +
         " contacts=" + std::to_string(log.contacts.size()) +
         " edges=" + std::to_string(edges.size()) + "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %14s %18s %12s\n", "structure",
                "space_bits", "bits_per_contact", "build_ms");
  out += line;
  for (StructureKind kind : kinds) {
    auto start = clock::now();
    auto index = build_index(kind, log.contacts, log.n, log.tau);
    double ms =
        std::chrono::duration<double, std::milli>(clock::now() - start)
            .count();
    double bpc = log.contacts.empty() ? 0.0
                                      : static_cast<double>(
                                            index->space_bits()) /
                                            log.contacts.size();
    std::snprintf(line, sizeof(line), "%-10s %14llu %18.1f %12.2f\n",
                  to_string(kind),
                  static_cast<unsigned long long>(index->space_bits()), bpc,
                  ms);
    out += line;
  }
  return out;
}

}  // namespace tgraph
