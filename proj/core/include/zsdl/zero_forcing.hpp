#pragma once

#include <utility>
#include <vector>

#include "zsdl/graph.hpp"

namespace zsdl {

struct Force {
  Vertex forcer;
  Vertex forced;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Record of the color-change process started from `initial_black`.
struct ForcingChronicle {
  VertexList initial_black;
  std::vector<Force> forces;
  VertexList final_black;
};

/// Runs the color-change rule to a fixed point. Each round scans black
/// vertices in ascending id and applies the first available force.
ForcingChronicle forcing_closure(const Graph& g, std::span<const Vertex> initial_black);

/// Closure as a mask; forces are applied in bulk passes, which yields the
/// same fixed point as the chronicle.
VertexMask closure_mask(const Graph& g, VertexMask black);

bool is_zero_forcing_set(const Graph& g, std::span<const Vertex> s);
inline bool is_zero_forcing_mask(const Graph& g, VertexMask s) { return closure_mask(g, s) == g.vertices(); }

struct ZResult {
  int value = 0;
  VertexList witness;
};

/// Exact Z(G) by cardinality-ascending lexicographic subset search. A
/// disconnected graph sums over its components (forcing never crosses
/// components); the witness is the union of component witnesses. Z(K_1) = 1.
ZResult zero_forcing_number(const Graph& g);

/// Value only, for the scan hot path.
int zero_forcing_value(const Graph& g);

/// max{2, sum ceil(|U_i|/2)} for a partial n-sun with the given segment sizes.
int partial_sun_Z(int cycle_length, std::span<const int> segments);

/// sum Z(G_i) - k + 1 over the k branches G_i = <V_i + v> at cut vertex v.
int z_cut_vertex_lower_bound(const Graph& g, Vertex v);

}  // namespace zsdl
