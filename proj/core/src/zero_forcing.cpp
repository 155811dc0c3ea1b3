#include "zsdl/zero_forcing.hpp"

#include <algorithm>

#include "zsdl/subsets.hpp"

namespace zsdl {

ForcingChronicle forcing_closure(const Graph& g, std::span<const Vertex> initial_black) {
  for (Vertex v : initial_black) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex id out of range: " + std::to_string(v));
  }
  VertexMask black = to_mask(initial_black);
  ForcingChronicle chronicle{to_list(black), {}, {}};
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (Vertex u = 0; u < g.order() && !progressed; ++u) {
      if (!contains(black, u)) continue;
      VertexMask white = g.neighbors(u) & ~black;
      if (popcount(white) == 1) {
        Vertex w = std::countr_zero(white);
        chronicle.forces.push_back({u, w});
        black |= white;
        progressed = true;
      }
    }
  }
  chronicle.final_black = to_list(black);
  return chronicle;
}

VertexMask closure_mask(const Graph& g, VertexMask black) {
  black &= g.vertices();
  VertexMask spent = 0;  // black vertices with no white neighbour left
  bool changed = true;
  while (changed) {
    changed = false;
    for_each_vertex(black & ~spent, [&](Vertex u) {
      VertexMask white = g.neighbors(u) & ~black;
      if (white == 0) {
        spent |= bit(u);
      } else if ((white & (white - 1)) == 0) {
        black |= white;
        spent |= bit(u);
        changed = true;
      }
    });
  }
  return black;
}

bool is_zero_forcing_set(const Graph& g, std::span<const Vertex> s) { return is_zero_forcing_mask(g, to_mask(s)); }

namespace {

VertexMask connected_witness(const Graph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    if (auto w = first_subset(n, k, [&](VertexMask m) { return is_zero_forcing_mask(g, m); })) return *w;
  }
  return g.vertices();
}

}  // namespace

ZResult zero_forcing_number(const Graph& g) {
  ZResult out;
  for (const auto& comp : connected_components(g)) {
    VertexMask w = connected_witness(comp.graph);
    out.value += popcount(w);
    for_each_vertex(w, [&](Vertex v) { out.witness.push_back(comp.original[static_cast<std::size_t>(v)]); });
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

int zero_forcing_value(const Graph& g) {
  if (is_connected(g)) return popcount(connected_witness(g));
  int total = 0;
  for (const auto& comp : connected_components(g)) total += popcount(connected_witness(comp.graph));
  return total;
}

int partial_sun_Z(int cycle_length, std::span<const int> segments) {
  if (cycle_length < 3) throw GraphError("partial sun needs a cycle of length >= 3");
  int total = 0;
  int sum_ceil = 0;
  for (int s : segments) {
    if (s < 1) throw GraphError("segment sizes must be >= 1");
    total += s;
    sum_ceil += (s + 1) / 2;
  }
  const int t = static_cast<int>(segments.size());
  // t segments need t separating gaps, except a single segment covering the whole cycle.
  bool full_cycle = t == 1 && total == cycle_length;
  if (!full_cycle && total + t > cycle_length)
    throw GraphError("segment layout does not fit on C_" + std::to_string(cycle_length));
  return std::max(2, sum_ceil);
}

int z_cut_vertex_lower_bound(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex id out of range: " + std::to_string(v));
  if (!is_connected(g)) throw GraphError("cut-vertex bound requires a connected graph");
  auto parts = component_masks(g, g.vertices() & ~bit(v));
  const int k = static_cast<int>(parts.size());
  if (k < 2) throw GraphError("vertex " + std::to_string(v) + " is not a cut vertex");
  int sum = 0;
  for (VertexMask part : parts) sum += zero_forcing_value(induced_subgraph(g, part | bit(v)).graph);
  return sum - k + 1;
}

}  // namespace zsdl
