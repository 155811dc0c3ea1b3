#include "zsdl/unicyclic.hpp"

#include <algorithm>
#include <map>

#include "zsdl/strong_resolving.hpp"
#include "zsdl/zero_forcing.hpp"

namespace zsdl {

namespace {

int degree_in(const Graph& g, VertexMask alive, Vertex v) { return popcount(g.neighbors(v) & alive); }

// Path component vertices in order, from the smaller endpoint.
VertexList path_order(const Graph& g, VertexMask comp) {
  Vertex start = -1;
  for_each_vertex(comp, [&](Vertex v) {
    if (start < 0 && degree_in(g, comp, v) <= 1) start = v;
  });
  VertexList out{start};
  VertexMask seen = bit(start);
  for (VertexMask next = g.neighbors(start) & comp; next != 0;) {
    Vertex v = std::countr_zero(next);
    out.push_back(v);
    seen |= bit(v);
    next = g.neighbors(v) & comp & ~seen;
  }
  return out;
}

bool is_isolated_path(const Graph& g, VertexMask alive, VertexMask comp) {
  return comp != 0 && (comp & ~alive) == 0 && reach(g, std::countr_zero(comp), alive) == comp && is_path(g, comp);
}

class ComponentInvariants {
 public:
  explicit ComponentInvariants(const Graph& g) : g_(g) {}

  // (Z, sdim) of the subgraph induced by alive, additive over components.
  std::pair<int, int> of(VertexMask alive) {
    std::pair<int, int> total{0, 0};
    for (VertexMask comp : component_masks(g_, alive)) {
      auto [it, inserted] = memo_.try_emplace(comp);
      if (inserted) {
        Graph h = induced_subgraph(g_, comp).graph;
        it->second = {zero_forcing_value(h), strong_metric_dimension_value(h)};
      }
      total.first += it->second.first;
      total.second += it->second.second;
    }
    return total;
  }

 private:
  const Graph& g_;
  std::map<VertexMask, std::pair<int, int>> memo_;
};

VertexMask step_mask(const TrimStep& step) { return to_mask(step.targets); }

void judge(TrimDelta& d) {
  switch (d.step.kind) {
    case TrimKind::PeripheralLeaf:
      d.z_holds = d.dz() == 0;
      d.sdim_holds = d.dsdim() == 0;
      break;
    case TrimKind::IsolatedPath: {
      int path_sdim = d.step.targets.size() >= 2 ? 1 : 0;
      d.z_holds = d.dz() == -1;
      d.sdim_holds = d.dsdim() == -path_sdim;
      break;
    }
    case TrimKind::AppropriateVertex:
      d.z_holds = d.dz() == 1;
      d.sdim_asserted = !d.on_cycle;
      d.sdim_holds = d.on_cycle || d.dsdim() <= 1;
      break;
  }
}

TrimDelta measure(ComponentInvariants& inv, const Graph& g, VertexMask alive, const TrimStep& step) {
  TrimDelta d{step};
  std::tie(d.z_before, d.sdim_before) = inv.of(alive);
  std::tie(d.z_after, d.sdim_after) = inv.of(alive & ~step_mask(step));
  d.on_cycle = step.kind == TrimKind::AppropriateVertex && contains(cycle_core(g, alive), step.targets.front());
  judge(d);
  return d;
}

}  // namespace

std::string_view to_string(TrimKind kind) {
  switch (kind) {
    case TrimKind::PeripheralLeaf: return "peripheral-leaf";
    case TrimKind::IsolatedPath: return "isolated-path";
    case TrimKind::AppropriateVertex: return "appropriate-vertex";
  }
  return "?";
}

VertexMask cycle_core(const Graph& g, VertexMask alive) {
  alive &= g.vertices();
  while (true) {
    VertexMask low = 0;
    for_each_vertex(alive, [&](Vertex v) {
      if (degree_in(g, alive, v) <= 1) low |= bit(v);
    });
    if (low == 0) return alive;
    alive &= ~low;
  }
}

VertexList unique_cycle(const Graph& g) {
  if (g.order() == 0 || classify(g).kind != GraphKind::Unicyclic) throw GraphError("graph is not unicyclic");
  VertexMask core = cycle_core(g, g.vertices());
  Vertex start = std::countr_zero(core);
  VertexList out{start};
  VertexMask seen = bit(start);
  VertexMask step = g.neighbors(start) & core;
  while (step != 0) {
    Vertex v = std::countr_zero(step);  // smaller neighbour first
    out.push_back(v);
    seen |= bit(v);
    step = g.neighbors(v) & core & ~seen;
  }
  return out;
}

bool is_peripheral_leaf(const Graph& g, VertexMask alive, Vertex l) {
  if (!contains(alive, l)) return false;
  VertexMask nb = g.neighbors(l) & alive;
  if (popcount(nb) != 1) return false;
  return degree_in(g, alive, std::countr_zero(nb)) == 2;
}

bool is_appropriate_vertex(const Graph& g, VertexMask alive, Vertex v) {
  if (!contains(alive, v) || degree_in(g, alive, v) < 3) return false;
  int pendant_paths = 0;
  for (VertexMask comp : component_masks(g, alive & ~bit(v))) {
    VertexMask attach = g.neighbors(v) & comp;
    if (popcount(attach) != 1 || !is_path(g, comp)) continue;
    if (degree_in(g, comp, std::countr_zero(attach)) <= 1) ++pendant_paths;
  }
  return pendant_paths >= 2;
}

std::optional<TrimStep> next_trim_step(const Graph& g, VertexMask alive, VertexMask protected_cycle) {
  alive &= g.vertices();
  VertexMask open = alive & ~protected_cycle;
  std::optional<TrimStep> found;
  for_each_vertex(open, [&](Vertex l) {
    if (!found && is_peripheral_leaf(g, alive, l)) found = TrimStep{TrimKind::PeripheralLeaf, {l}};
  });
  if (found) return found;
  for (VertexMask comp : component_masks(g, alive)) {
    if (is_path(g, comp)) return TrimStep{TrimKind::IsolatedPath, path_order(g, comp)};
  }
  for_each_vertex(open, [&](Vertex v) {
    if (!found && is_appropriate_vertex(g, alive, v)) found = TrimStep{TrimKind::AppropriateVertex, {v}};
  });
  return found;
}

std::optional<TrimStep> next_trim_step(const Graph& g, bool protect_cycle) {
  VertexMask all = g.vertices();
  return next_trim_step(g, all, protect_cycle ? cycle_core(g, all) : 0);
}

TrimTrace trimmed_form(const Graph& g, bool protect_cycle) {
  if (g.order() == 0 || classify(g).kind != GraphKind::Unicyclic) throw GraphError("graph is not unicyclic");
  VertexMask alive = g.vertices();
  VertexMask guard = protect_cycle ? cycle_core(g, alive) : 0;
  TrimTrace trace;
  while (auto step = next_trim_step(g, alive, guard)) {
    alive &= ~step_mask(*step);
    trace.steps.push_back(std::move(*step));
  }
  trace.remaining = alive;
  trace.result = induced_subgraph(g, alive);
  return trace;
}

std::vector<int> sun_segments(std::span<const int> counts) {
  const int n = static_cast<int>(counts.size());
  auto leafed = [&](int i) { return counts[static_cast<std::size_t>(((i % n) + n) % n)] > 0; };
  int bare = -1;
  for (int i = 0; i < n && bare < 0; ++i)
    if (!leafed(i)) bare = i;
  if (bare < 0) return n > 0 ? std::vector<int>{n} : std::vector<int>{};
  std::vector<int> out;
  int run = 0;
  for (int i = bare + 1; i <= bare + n; ++i) {
    if (leafed(i)) {
      ++run;
    } else if (run > 0) {
      out.push_back(run);
      run = 0;
    }
  }
  return out;
}

std::optional<SunDescription> detect_generalized_partial_sun(const Graph& g) {
  if (g.order() < 3 || !is_connected(g) || g.size() != g.order()) return std::nullopt;
  SunDescription sun;
  sun.cycle = unique_cycle(g);
  sun.cycle_length = static_cast<int>(sun.cycle.size());
  VertexMask on_cycle = to_mask(sun.cycle);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (contains(on_cycle, v)) continue;
    if (g.degree(v) != 1 || (g.neighbors(v) & on_cycle) == 0) return std::nullopt;
  }
  for (Vertex c : sun.cycle) sun.leaves_per_cycle_vertex.push_back(popcount(g.neighbors(c) & ~on_cycle));
  sun.segments = sun_segments(sun.leaves_per_cycle_vertex);
  sun.partial = std::all_of(sun.leaves_per_cycle_vertex.begin(), sun.leaves_per_cycle_vertex.end(),
                            [](int c) { return c <= 1; });
  return sun;
}

TrimDelta trim_invariant_check(const Graph& g, const TrimStep& step) {
  if (step.targets.empty()) throw GraphError("trim step has no target");
  VertexMask all = g.vertices();
  for (Vertex v : step.targets)
    if (v < 0 || v >= g.order()) throw GraphError("trim target out of range");
  bool valid = false;
  switch (step.kind) {
    case TrimKind::PeripheralLeaf:
      valid = step.targets.size() == 1 && is_peripheral_leaf(g, all, step.targets.front());
      break;
    case TrimKind::IsolatedPath:
      valid = is_isolated_path(g, all, step_mask(step));
      break;
    case TrimKind::AppropriateVertex:
      valid = step.targets.size() == 1 && is_appropriate_vertex(g, all, step.targets.front());
      break;
  }
  if (!valid) throw GraphError(std::string("invalid ") + std::string(to_string(step.kind)) + " step");
  ComponentInvariants inv(g);
  return measure(inv, g, all, step);
}

std::vector<TrimDelta> trace_deltas(const Graph& g, const TrimTrace& trace) {
  ComponentInvariants inv(g);
  std::vector<TrimDelta> out;
  out.reserve(trace.steps.size());
  VertexMask alive = g.vertices();
  for (const auto& step : trace.steps) {
    out.push_back(measure(inv, g, alive, step));
    alive &= ~step_mask(step);
  }
  return out;
}

}  // namespace zsdl
