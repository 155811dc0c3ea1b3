#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zsdl/families.hpp"
#include "zsdl/graph.hpp"
#include "zsdl/scan.hpp"
#include "zsdl/strong_resolving.hpp"
#include "zsdl/unicyclic.hpp"
#include "zsdl/zero_forcing.hpp"

namespace zsdl {

namespace {

std::string join(const VertexList& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out;
}

EnumerationLimits limits_from_env() {
  const char* v = std::getenv("ZSDL_LONG");
  return {v != nullptr && std::string_view(v) == "1"};
}

std::vector<Graph> read_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

int run_invariants(const std::string& graph, const std::string& in_path, const std::string& format, std::ostream& out) {
  std::vector<Graph> graphs = in_path.empty() ? std::vector<Graph>{parse_graph6(graph)} : read_graphs(in_path);
  if (format == "csv") out << csv_header() << "\n";
  for (const auto& g : graphs) {
    InvariantRow row = invariant_row(g);
    out << (format == "csv" ? to_csv(row) : to_json(row)) << "\n";
  }
  return kExitOk;
}

int run_witness(const std::string& graph, const std::string& invariant, std::ostream& out) {
  Graph g = parse_graph6(graph);
  int value = 0;
  VertexList witness;
  if (invariant == "z") {
    auto r = zero_forcing_number(g);
    value = r.value;
    witness = r.witness;
  } else if (invariant == "sdim") {
    auto r = strong_metric_dimension(g);
    value = r.value;
    witness = r.witness;
  } else {
    auto r = metric_dimension(g);
    value = r.value;
    witness = r.witness;
  }
  out << "graph6=" << encode_graph6(g) << " invariant=" << invariant << " value=" << value
      << " witness=" << join(witness) << "\n";
  return kExitOk;
}

int run_trim(const std::string& graph, bool protect, std::ostream& out) {
  Graph g = parse_graph6(graph);
  TrimTrace trace = trimmed_form(g, protect);
  auto deltas = trace_deltas(g, trace);
  out << "trim graph6=" << encode_graph6(g) << " n=" << g.order() << " protect_cycle=" << (protect ? 1 : 0) << "\n";
  bool all_hold = true;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const TrimDelta& d = deltas[i];
    all_hold = all_hold && d.holds();
    out << "step " << (i + 1) << " " << to_string(d.step.kind) << " " << join(d.step.targets) << " Z=" << d.z_before
        << "->" << d.z_after << " sdim=" << d.sdim_before << "->" << d.sdim_after << " dZ=" << d.dz()
        << " dsdim=" << d.dsdim();
    if (d.step.kind == TrimKind::AppropriateVertex) out << " on_cycle=" << (d.on_cycle ? 1 : 0);
    out << " contract=" << (d.holds() ? (d.sdim_asserted ? "ok" : "ok-z-only") : "violated") << "\n";
  }
  out << "result n=" << trace.result.graph.order() << " graph6=" << encode_graph6(trace.result.graph)
      << " vertices=" << join(trace.result.original) << "\n";
  return all_hold ? kExitOk : kExitCounterexample;
}

int run_gen(const std::string& family, bool plus_e, std::ostream& out) {
  FamilySpec spec = FamilySpec::parse(family);
  if (plus_e) {
    if (spec.kind != FamilyKind::Comb) throw FamilyError("--plus-e applies to comb families only");
    spec.kind = FamilyKind::CombPlusE;
  }
  make_enumeration(spec, limits_from_env())->for_each([&](const FamilyItem& item) {
    out << encode_graph6(item.graph) << "\n";
  });
  return kExitOk;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int run_scan(const std::vector<std::string>& claims, const std::string& family, int jobs, const std::string& out_path,
             std::ostream& out) {
  FamilySpec spec = FamilySpec::parse(family);
  auto reports = run_claims(claims, spec, {jobs, limits_from_env()});
  bool held = true;
  for (const auto& r : reports) {
    held = held && r.held();
    out << r.claim_id << " family=" << r.family << " checked=" << r.graphs_checked << " skipped=" << r.graphs_skipped
        << " counterexamples=" << r.counterexample_count << "\n";
    for (const auto& e : r.extremal) out << "  max " << e.name << " = " << e.value.to_string() << " at " << e.graph6 << "\n";
    for (const auto& c : r.counterexamples) out << "  counterexample " << c.graph6 << "\n";
  }
  if (!out_path.empty()) {
    std::filesystem::path json_path(out_path);
    std::string json;
    if (reports.size() == 1) {
      json = to_json(reports.front());
    } else {
      json = "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) json += (i ? ",\n" : "") + to_json(reports[i]);
      json += "\n]";
    }
    write_file(json_path, json + "\n");
    std::string csv = csv_header() + "\n";
    for (const auto& r : reports)
      for (const auto& c : r.counterexamples) csv += to_csv(invariant_row(parse_graph6(c.graph6))) + "\n";
    std::filesystem::path csv_path = json_path;
    csv_path.replace_extension(".csv");
    write_file(csv_path, csv);
  }
  return held ? kExitOk : kExitCounterexample;
}

int run_ratio(const std::string& family, int top, int jobs, std::ostream& out) {
  FamilySpec spec = FamilySpec::parse(family);
  RatioSummary s = ratio_explore(spec, top, {jobs, limits_from_env()});
  out << "family=" << spec.to_string() << " checked=" << s.checked << " skipped_trees=" << s.skipped_trees
      << " skipped_disconnected=" << s.skipped_disconnected << " negative=" << s.negative << " zero=" << s.zero
      << " positive=" << s.positive << "\n";
  for (const auto& r : s.top)
    out << r.graph6 << " Z=" << r.z << " sdim=" << r.sdim << " r=" << r.rank << " ratio=" << r.ratio.to_string() << "\n";
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact zero forcing number and strong metric dimension of small graphs", "zsdl"};
  app.require_subcommand(1);

  std::string graph, in_path, format = "csv", invariant, family, out_path;
  std::vector<std::string> claims;
  bool protect = false, plus_e = false;
  int jobs = 1, top = 10;

  auto* inv = app.add_subcommand("invariants", "Z, sdim, dim, sigma, rank and class of graph6 input");
  auto* inv_graph = inv->add_option("--graph", graph, "graph6 string");
  auto* inv_in = inv->add_option("--in", in_path, "file with one graph6 per line");
  inv_graph->excludes(inv_in);
  inv->add_option("--out", format, "output format")->check(CLI::IsMember({"csv", "json"}));

  auto* wit = app.add_subcommand("witness", "value and canonical minimum witness of one invariant");
  wit->add_option("--graph", graph, "graph6 string")->required();
  wit->add_option("--invariant", invariant, "z, sdim or dim")->required()->check(CLI::IsMember({"z", "sdim", "dim"}));

  auto* trim = app.add_subcommand("trim", "trim a unicyclic graph and log each deletion with its deltas");
  trim->add_option("--graph", graph, "graph6 string")->required();
  trim->add_flag("--protect-cycle", protect, "never delete cycle vertices");

  auto* gen = app.add_subcommand("gen", "print graph6 of every member of a family");
  gen->add_option("--family", family, "family spec, e.g. comb:k=4")->required();
  gen->add_flag("--plus-e", plus_e, "for comb: add the edge joining the spine ends");

  auto* scan = app.add_subcommand("scan", "check registered claims over a family");
  scan->add_option("--claim", claims, "claim id (repeatable)")->required();
  scan->add_option("--family", family, "family spec")->required();
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", out_path, "write the JSON report here and a CSV next to it");

  auto* ratio = app.add_subcommand("ratio", "largest exact (Z - sdim) / r over a family");
  ratio->add_option("--family", family, "family spec")->required();
  ratio->add_option("--top", top, "records to keep")->check(CLI::NonNegativeNumber);
  ratio->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (inv->parsed()) {
      if (graph.empty() && in_path.empty()) {
        err << "invariants: one of --graph or --in is required\n";
        return kExitUsage;
      }
      return run_invariants(graph, in_path, format, out);
    }
    if (wit->parsed()) return run_witness(graph, invariant, out);
    if (trim->parsed()) return run_trim(graph, protect, out);
    if (gen->parsed()) return run_gen(family, plus_e, out);
    if (scan->parsed()) return run_scan(claims, family, jobs, out_path, out);
    if (ratio->parsed()) return run_ratio(family, top, jobs, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zsdl
