#include "zsdl/strong_resolving.hpp"

#include <algorithm>

#include "zsdl/subsets.hpp"

namespace zsdl {

namespace {

template <class Resolves>
std::vector<VertexMask> pair_masks(const DistanceMatrix& dm, Resolves&& resolves) {
  const int n = dm.order();
  std::vector<VertexMask> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      VertexMask m = 0;
      for (Vertex x = 0; x < n; ++x)
        if (resolves(x, u, v)) m |= bit(x);
      out.push_back(m);
    }
  }
  return out;
}

bool hits_all(std::span<const VertexMask> constraints, VertexMask w) {
  return std::all_of(constraints.begin(), constraints.end(), [&](VertexMask c) { return (c & w) != 0; });
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw GraphError(std::string(what) + " requires a connected graph");
}

VertexMask connected_sdim_witness(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  DistanceMatrix dm(g);
  auto constraints = strong_resolver_masks(dm);
  int seed = std::max(leaf_count(g) - 1, mmd_vertex_cover_lower_bound(mmd_graph(dm, g)));
  return minimum_hitting_set(n, constraints, seed).witness;
}

}  // namespace

std::vector<VertexMask> strong_resolver_masks(const DistanceMatrix& dm) {
  return pair_masks(dm, [&](Vertex x, Vertex u, Vertex v) { return strongly_resolves(x, u, v, dm); });
}

std::vector<VertexMask> resolver_masks(const DistanceMatrix& dm) {
  return pair_masks(dm, [&](Vertex x, Vertex u, Vertex v) { return dm(x, u) != dm(x, v); });
}

bool is_strong_resolving_set(const Graph& g, std::span<const Vertex> w) {
  require_connected(g, "strong resolving check");
  return hits_all(strong_resolver_masks(DistanceMatrix(g)), to_mask(w));
}

bool is_resolving_set(const Graph& g, std::span<const Vertex> w) {
  require_connected(g, "resolving check");
  return hits_all(resolver_masks(DistanceMatrix(g)), to_mask(w));
}

MmdGraph mmd_graph(const DistanceMatrix& dm, const Graph& g) {
  const int n = g.order();
  // far[y] = vertices x maximally distant from y
  std::vector<VertexMask> far(static_cast<std::size_t>(n), 0);
  for (Vertex y = 0; y < n; ++y) {
    for (Vertex x = 0; x < n; ++x) {
      bool maximal = true;
      for_each_vertex(g.neighbors(x), [&](Vertex z) { maximal = maximal && dm(x, y) >= dm(z, y); });
      if (maximal) far[static_cast<std::size_t>(y)] |= bit(x);
    }
  }
  MmdGraph out{n, {}};
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (contains(far[static_cast<std::size_t>(y)], x) && contains(far[static_cast<std::size_t>(x)], y))
        out.pairs.emplace_back(x, y);
  return out;
}

MmdGraph mmd_graph(const Graph& g) {
  require_connected(g, "MMD graph");
  return mmd_graph(DistanceMatrix(g), g);
}

int mmd_vertex_cover_lower_bound(const MmdGraph& m) {
  std::vector<VertexMask> edges;
  edges.reserve(m.pairs.size());
  for (auto [x, y] : m.pairs) edges.push_back(bit(x) | bit(y));
  return minimum_hitting_set(m.n, edges).size;
}

SdimResult strong_metric_dimension(const Graph& g) {
  SdimResult out;
  for (const auto& comp : connected_components(g)) {
    VertexMask w = connected_sdim_witness(comp.graph);
    out.value += popcount(w);
    for_each_vertex(w, [&](Vertex v) { out.witness.push_back(comp.original[static_cast<std::size_t>(v)]); });
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

int strong_metric_dimension_value(const Graph& g) {
  if (is_connected(g)) return popcount(connected_sdim_witness(g));
  int total = 0;
  for (const auto& comp : connected_components(g)) total += popcount(connected_sdim_witness(comp.graph));
  return total;
}

DimResult metric_dimension(const Graph& g) {
  require_connected(g, "metric dimension");
  if (g.order() <= 1) return {};
  auto found = minimum_hitting_set(g.order(), resolver_masks(DistanceMatrix(g)));
  return {found.size, to_list(found.witness)};
}

}  // namespace zsdl
