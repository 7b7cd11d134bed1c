#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgraph/bench.hpp"
#include "tgraph/generator.hpp"
#include "tgraph/io.hpp"

namespace tgraph {

namespace cli_detail {

inline VertexId resolve_vertex(const std::string& token,
                               const std::vector<std::string>& names,
                               std::uint32_t n) {
  bool numeric = !token.empty() &&
                 std::all_of(token.begin(), token.end(), [](unsigned char c) {
                   return std::isdigit(c);
                 });
  if (numeric) {
    unsigned long id = std::stoul(token);
    if (id >= n) throw RangeError("vertex id out of range: " + token);
    return static_cast<VertexId>(id);
  }
  for (VertexId v = 0; v < names.size(); ++v)
    if (names[v] == token) return v;
  throw RangeError("unknown vertex name: " + token);
}

inline std::string vertex_name(VertexId v,
                               const std::vector<std::string>& names) {
  if (v < names.size() && !names[v].empty()) return names[v];
  return std::to_string(v);
}

inline std::vector<StructureKind> parse_structures(const std::string& csv) {
  if (csv.empty() || csv == "all") return all_structures();
  std::vector<StructureKind> out;
  std::istringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto kind = structure_from_name(item);
    if (!kind) throw Error("unknown structure: " + item);
    out.push_back(*kind);
  }
  return out;
}

inline void print_vertices(std::ostream& out,
                           const std::vector<VertexId>& vs,
                           const std::vector<std::string>& names) {
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out << ' ';
    out << vertex_name(vs[k], names);
  }
  out << '\n';
}

inline void print_edges(std::ostream& out, const std::vector<Edge>& es,
                        const std::vector<std::string>& names) {
  for (const Edge& e : es)
    out << vertex_name(e.first, names) << ' ' << vertex_name(e.second, names)
        << '\n';
}

}  // namespace cli_detail

// Runs one query against a loaded index and prints the result. Returns the
// process exit code.
inline int run_query(const TemporalGraphIndex& index,
                     const std::vector<std::string>& names,
                     const std::string& op,
                     const std::vector<std::string>& args,
                     std::optional<Timestamp> from, std::optional<Timestamp> to,
                     const std::string& semantics, std::ostream& out,
                     std::ostream& err) {
  using cli_detail::resolve_vertex;
  try {
    if (!from) throw Error("--from is required");
    Timestamp qb = *from;
    Timestamp qe = to ? *to : qb;
    QueryInterval q;
    if (semantics == "point") {
      if (qb != qe) throw RangeError("point query needs --from == --to");
      q = QueryInterval::point(qb);
    } else if (semantics == "weak") {
      q = QueryInterval::weak(qb, qe);
    } else if (semantics == "strong") {
      q = QueryInterval::strong(qb, qe);
    } else if (semantics.empty()) {
      q = qb == qe ? QueryInterval::point(qb) : QueryInterval::weak(qb, qe);
    } else {
      throw Error("unknown semantics: " + semantics);
    }

    auto need_args = [&](std::size_t count) {
      if (args.size() != count)
        throw Error(op + " takes " + std::to_string(count) +
                    " vertex argument(s)");
    };
    std::uint32_t n = index.vertex_count();
    if (op == "has_edge") {
      need_args(2);
      out << (index.has_edge(resolve_vertex(args[0], names, n),
                             resolve_vertex(args[1], names, n), q)
                  ? "true"
                  : "false")
          << '\n';
    } else if (op == "next_activation") {
      need_args(2);
      // Interval forms are shown as empty: the query is point-time only.
      if (q.semantics == Semantics::kPoint || qb == qe) {
        auto r = index.next_activation(resolve_vertex(args[0], names, n),
                                       resolve_vertex(args[1], names, n), qb);
        if (r) out << *r << '\n';
      }
    } else if (op == "neighbors") {
      need_args(1);
      cli_detail::print_vertices(
          out, index.neighbors(resolve_vertex(args[0], names, n), q), names);
    } else if (op == "neighbors_r") {
      need_args(1);
      cli_detail::print_vertices(
          out, index.neighbors_r(resolve_vertex(args[0], names, n), q), names);
    } else if (op == "aggregate") {
      need_args(0);
      cli_detail::print_edges(out, index.aggregate(q), names);
    } else if (op == "activated_edges") {
      need_args(0);
      cli_detail::print_edges(out, index.activated_edges(q), names);
    } else if (op == "deactivated_edges") {
      need_args(0);
      cli_detail::print_edges(out, index.deactivated_edges(q), names);
    } else if (op == "changed_edges") {
      need_args(0);
      cli_detail::print_edges(out, index.changed_edges(q), names);
    } else {
      throw Error("unknown query: " + op);
    }
    return 0;
  } catch (const SemanticsError& e) {
    err << "semantics error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"space-efficient temporal graph indexes"};
  app.require_subcommand(1);

  // ingest
  std::string ingest_input, ingest_output, ingest_format = "bin";
  CLI::App* ingest = app.add_subcommand(
      "ingest", "parse and validate a contact log, optionally re-encode it");
  ingest->add_option("input", ingest_input)->required();
  ingest->add_option("-o,--output", ingest_output);
  ingest->add_option("--format", ingest_format)
      ->check(CLI::IsMember({"tsv", "bin"}));

  // build
  std::string build_structure, build_input, build_output, psi_mode = "plain";
  bool with_reverse = false;
  CLI::App* build = app.add_subcommand("build", "build and serialize an index");
  build->add_option("structure", build_structure)->required();
  build->add_option("input", build_input)->required();
  build->add_option("output", build_output)->required();
  build->add_flag("--with-reverse", with_reverse,
                  "also build the reversed twin (edgelog, evelog, cas)");
  build->add_option("--psi", psi_mode, "tgcsa successor array encoding")
      ->check(CLI::IsMember({"plain", "compressed"}));

  // query
  std::string query_index, query_op;
  std::vector<std::string> query_args;
  std::optional<std::uint32_t> query_from, query_to;
  std::string query_semantics;
  CLI::App* query = app.add_subcommand("query", "run one query on an index");
  query->add_option("index", query_index)->required();
  query->add_option("op", query_op)->required();
  query->add_option("args", query_args);
  query->add_option("--from", query_from);
  query->add_option("--to", query_to);
  query->add_option("--semantics", query_semantics)
      ->check(CLI::IsMember({"point", "weak", "strong"}));

  // gen
  std::uint32_t gen_n = 0, gen_tau = 0;
  std::uint64_t gen_c = 0, gen_seed = 1;
  std::string gen_output, gen_format = "tsv", degree_model = "uniform";
  CLI::App* gen = app.add_subcommand("gen", "generate a random contact log");
  gen->add_option("n", gen_n)->required();
  gen->add_option("tau", gen_tau)->required();
  gen->add_option("c", gen_c)->required();
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--output", gen_output);
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"tsv", "bin"}));
  gen->add_option("--degree-model", degree_model)
      ->check(CLI::IsMember({"uniform"}));

  // bench
  std::string bench_input, bench_structures = "all", bench_json;
  std::uint64_t bench_queries = 100, bench_seed = 42;
  bool omit_timings = false, no_oracle = false;
  CLI::App* bench = app.add_subcommand(
      "bench", "build structures, measure space and per-query latency");
  bench->add_option("-i,--input", bench_input)->required();
  bench->add_option("--structures", bench_structures);
  bench->add_option("--queries-per-class", bench_queries);
  bench->add_option("--seed", bench_seed);
  bench->add_option("--json", bench_json, "write the machine-readable report");
  bench->add_flag("--omit-timings", omit_timings,
                  "deterministic output: drop wall-clock fields");
  bench->add_flag("--no-oracle-check", no_oracle);

  // stats
  std::string stats_input, stats_structures = "all";
  CLI::App* stats = app.add_subcommand("stats", "per-structure space report");
  stats->add_option("-i,--input", stats_input)->required();
  stats->add_option("--structures", stats_structures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (ingest->parsed()) {
      ContactLog log = load_contact_log(ingest_input);
      out << "contacts=" << log.contacts.size() << " n=" << log.n
          << " tau=" << log.tau << '\n';
      if (!ingest_output.empty()) {
        if (ingest_format == "bin") {
          write_file(ingest_output, encode_contact_log(log));
        } else {
          std::ofstream f(ingest_output, std::ios::trunc);
          if (!f) throw IoError("cannot open " + ingest_output);
          write_contact_text(log, f);
        }
      }
      return 0;
    }

    if (build->parsed()) {
      auto kind = structure_from_name(build_structure);
      if (!kind) throw Error("unknown structure: " + build_structure);
      ContactLog log = load_contact_log(build_input);
      BuildOptions opt;
      opt.with_reverse = with_reverse;
      opt.compress_psi = psi_mode == "compressed";
      auto index = build_index(*kind, log.contacts, log.n, log.tau, opt);
      write_file(build_output, IndexCodec::save(*index, log.names));
      out << to_string(*kind) << ": contacts=" << index->contact_count()
          << " space_bits=" << index->space_bits() << '\n';
      return 0;
    }

    if (query->parsed()) {
      IndexCodec::Loaded loaded = IndexCodec::load(read_file(query_index));
      return run_query(*loaded.index, loaded.names, query_op, query_args,
                       query_from, query_to, query_semantics, out, err);
    }

    if (gen->parsed()) {
      ContactLog log;
      log.n = gen_n;
      log.tau = gen_tau;
      log.contacts = validate(generate_uniform(gen_n, gen_tau, gen_c, gen_seed),
                              gen_n, gen_tau);
      if (gen_output.empty()) {
        write_contact_text(log, out);
      } else if (gen_format == "bin") {
        write_file(gen_output, encode_contact_log(log));
      } else {
        std::ofstream f(gen_output, std::ios::trunc);
        if (!f) throw IoError("cannot open " + gen_output);
        write_contact_text(log, f);
      }
      return 0;
    }

    if (bench->parsed()) {
      ContactLog log = load_contact_log(bench_input);
      BenchOptions opt;
      opt.structures = cli_detail::parse_structures(bench_structures);
      opt.queries_per_class = bench_queries;
      opt.seed = bench_seed;
      if (const char* env = std::getenv("TG_SEED"))
        opt.seed = std::strtoull(env, nullptr, 10);
      opt.include_timings = !omit_timings;
      opt.with_oracle_check = !no_oracle;
      nlohmann::json report = run_bench(log, opt);
      std::string text = report.dump(2) + "\n";
      if (!bench_json.empty())
        write_file(bench_json,
                   std::span<const std::uint8_t>(
                       reinterpret_cast<const std::uint8_t*>(text.data()),
                       text.size()));
      out << text;
      return 0;
    }

    if (stats->parsed()) {
      ContactLog log = load_contact_log(stats_input);
      out << format_stats(log, cli_detail::parse_structures(stats_structures));
      return 0;
    }
  } catch (const SemanticsError& e) {
    err << "semantics error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tgraph
