#pragma once

#include <utility>
#include <vector>

#include "zsdl/graph.hpp"

namespace zsdl {

/// True iff u lies on an x-v geodesic or v lies on an x-u geodesic.
inline bool strongly_resolves(Vertex x, Vertex u, Vertex v, const DistanceMatrix& dm) {
  return dm(x, u) + dm(u, v) == dm(x, v) || dm(x, v) + dm(v, u) == dm(x, u);
}

/// For every unordered pair {u,v}, the mask of vertices that strongly resolve it.
std::vector<VertexMask> strong_resolver_masks(const DistanceMatrix& dm);
/// For every unordered pair {u,v}, the mask of vertices x with d(x,u) != d(x,v).
std::vector<VertexMask> resolver_masks(const DistanceMatrix& dm);

bool is_strong_resolving_set(const Graph& g, std::span<const Vertex> w);
bool is_resolving_set(const Graph& g, std::span<const Vertex> w);

/// Unordered mutually-maximally-distant pairs, each stored with first < second.
struct MmdGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

MmdGraph mmd_graph(const Graph& g);
MmdGraph mmd_graph(const DistanceMatrix& dm, const Graph& g);

/// Exact minimum vertex cover of the MMD pairs.
int mmd_vertex_cover_lower_bound(const MmdGraph& m);

struct SdimResult {
  int value = 0;
  VertexList witness;
};

struct DimResult {
  int value = 0;
  VertexList witness;
};

/// Exact sdim(G). The search starts at max(sigma(G) - 1, MMD vertex cover);
/// disconnected graphs are summed over components and sdim(K_1) = 0.
SdimResult strong_metric_dimension(const Graph& g);
int strong_metric_dimension_value(const Graph& g);

/// Exact dim(G) for a connected graph; dim(K_1) = 0.
DimResult metric_dimension(const Graph& g);

}  // namespace zsdl
