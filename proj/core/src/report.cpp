#include "json.hpp"

#include "zsdl/scan.hpp"
#include "zsdl/strong_resolving.hpp"
#include "zsdl/zero_forcing.hpp"

namespace zsdl {

using nlohmann::ordered_json;

namespace {

ordered_json values_json(const std::vector<NamedValue>& values) {
  ordered_json out = ordered_json::object();
  for (const auto& v : values) {
    if (v.value.den() == 1) out[v.name] = v.value.num();
    else out[v.name] = v.value.to_string();
  }
  return out;
}

ordered_json row_json(const InvariantRow& row) {
  ordered_json j;
  j["graph6"] = row.graph6;
  j["n"] = row.n;
  j["Z"] = row.z;
  j["sdim"] = row.sdim;
  j["dim"] = row.dim ? ordered_json(*row.dim) : ordered_json(nullptr);
  j["sigma"] = row.sigma;
  j["rank"] = row.rank ? ordered_json(*row.rank) : ordered_json(nullptr);
  j["class"] = row.graph_class;
  return j;
}

}  // namespace

InvariantRow invariant_row(const Graph& g) {
  InvariantRow row;
  row.graph6 = encode_graph6(g);
  row.n = g.order();
  row.z = zero_forcing_value(g);
  row.sdim = strong_metric_dimension_value(g);
  row.sigma = leaf_count(g);
  if (g.order() > 0 && is_connected(g)) {
    GraphClass c = classify(g);
    row.dim = metric_dimension(g).value;
    row.rank = c.cycle_rank;
    row.graph_class = std::string(to_string(c.kind));
  } else {
    row.graph_class = "disconnected";
  }
  return row;
}

std::string csv_header() { return "graph6,n,Z,sdim,dim,sigma,rank,class"; }

std::string to_csv(const InvariantRow& row) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  // graph6 characters lie in '?'..'~' and never include a comma or quote.
  return row.graph6 + "," + std::to_string(row.n) + "," + std::to_string(row.z) + "," + std::to_string(row.sdim) + "," +
         opt(row.dim) + "," + std::to_string(row.sigma) + "," + opt(row.rank) + "," + row.graph_class;
}

std::string to_json(const InvariantRow& row) { return row_json(row).dump(); }

std::string to_json(const ScanReport& report, bool include_timing) {
  ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["claimId"] = report.claim_id;
  j["reference"] = report.reference;
  j["family"] = report.family;
  j["graphsChecked"] = report.graphs_checked;
  j["graphsSkipped"] = report.graphs_skipped;
  j["counterexampleCount"] = report.counterexample_count;
  ordered_json cx = ordered_json::array();
  for (const auto& c : report.counterexamples) {
    ordered_json e;
    e["graph6"] = c.graph6;
    if (c.base_graph6) e["baseGraph6"] = *c.base_graph6;
    e["values"] = values_json(c.values);
    cx.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(cx);
  ordered_json ext = ordered_json::array();
  for (const auto& r : report.extremal) {
    ext.push_back({{"quantity", r.name}, {"max", r.value.to_string()}, {"graph6", r.graph6}});
  }
  j["extremal"] = std::move(ext);
  if (include_timing) j["wallTime"] = report.wall_seconds;
  return j.dump(2);
}

std::string to_json(const RatioSummary& summary, const std::string& family) {
  ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["family"] = family;
  j["checked"] = summary.checked;
  j["skippedTrees"] = summary.skipped_trees;
  j["skippedDisconnected"] = summary.skipped_disconnected;
  j["negative"] = summary.negative;
  j["zero"] = summary.zero;
  j["positive"] = summary.positive;
  ordered_json top = ordered_json::array();
  for (const auto& r : summary.top) {
    top.push_back({{"graph6", r.graph6}, {"Z", r.z}, {"sdim", r.sdim}, {"r", r.rank}, {"ratio", r.ratio.to_string()}});
  }
  j["top"] = std::move(top);
  return j.dump(2);
}

}  // namespace zsdl
