#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "zsdl/graph.hpp"

namespace zsdl {

/// Vertices of the unique cycle in traversal order, starting at the smallest
/// id and continuing toward its smaller cycle neighbour.
VertexList unique_cycle(const Graph& g);

/// Vertices of `alive` that survive repeated removal of degree <= 1 vertices
/// (for a unicyclic graph minus some deletions: the cycle, if still intact).
VertexMask cycle_core(const Graph& g, VertexMask alive);

enum class TrimKind { PeripheralLeaf, IsolatedPath, AppropriateVertex };

std::string_view to_string(TrimKind kind);

/// One deletion move. `targets` is a single vertex, or the whole path (from
/// its smaller endpoint) for IsolatedPath. Ids refer to the input graph.
struct TrimStep {
  TrimKind kind;
  VertexList targets;
  friend bool operator==(const TrimStep&, const TrimStep&) = default;
};

struct TrimTrace {
  std::vector<TrimStep> steps;
  InducedSubgraph result;  ///< trimmed form with ids mapped back to the input
  VertexMask remaining = 0;
};

/// deg(l) = 1 and the neighbour of l has degree exactly 2.
bool is_peripheral_leaf(const Graph& g, VertexMask alive, Vertex l);

/// deg(v) >= 3 and at least two components of G - v are paths hanging from v
/// by a single edge at one of their endpoints.
bool is_appropriate_vertex(const Graph& g, VertexMask alive, Vertex v);

/// First available move on the subgraph induced by `alive`. Priority is
/// peripheral leaf, then isolated path, then appropriate vertex, smallest id
/// first within each kind. Vertices in `protected_cycle` are never targeted
/// as peripheral leaves or appropriate vertices.
std::optional<TrimStep> next_trim_step(const Graph& g, VertexMask alive, VertexMask protected_cycle);
std::optional<TrimStep> next_trim_step(const Graph& g, bool protect_cycle);

TrimTrace trimmed_form(const Graph& g, bool protect_cycle);

/// C_n with a (possibly zero) number of pendant leaves on each cycle vertex.
struct SunDescription {
  int cycle_length = 0;
  VertexList cycle;                          ///< cycle vertices in traversal order
  std::vector<int> leaves_per_cycle_vertex;  ///< aligned with `cycle`
  std::vector<int> segments;                 ///< maximal cyclic runs of leafed positions
  bool partial = false;                      ///< every count <= 1
};

/// Segment sizes of a cyclic 0/1-or-more leaf layout, starting after the first bare position.
std::vector<int> sun_segments(std::span<const int> leaves_per_position);

std::optional<SunDescription> detect_generalized_partial_sun(const Graph& g);

/// Z and sdim of G before and after one deletion, and whether the deletion
/// contract for its kind holds: peripheral leaf leaves both unchanged; an
/// isolated path P lowers Z by 1 and sdim by sdim(P); an appropriate vertex
/// raises Z by 1 and, off the cycle, raises sdim by at most 1.
struct TrimDelta {
  TrimStep step;
  int z_before = 0;
  int z_after = 0;
  int sdim_before = 0;
  int sdim_after = 0;
  bool on_cycle = false;
  bool sdim_asserted = true;
  bool z_holds = true;
  bool sdim_holds = true;

  int dz() const { return z_after - z_before; }
  int dsdim() const { return sdim_after - sdim_before; }
  bool holds() const { return z_holds && sdim_holds; }
};

TrimDelta trim_invariant_check(const Graph& g, const TrimStep& step);

/// Deltas for every step of a trace of g, replayed from g.
std::vector<TrimDelta> trace_deltas(const Graph& g, const TrimTrace& trace);

}  // namespace zsdl
