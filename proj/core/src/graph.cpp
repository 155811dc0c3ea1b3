#include "zsdl/graph.hpp"

#include <algorithm>
#include <limits>

namespace zsdl {

VertexList to_list(VertexMask m) {
  VertexList out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw GraphError("vertex id out of range: " + std::to_string(v));
    m |= bit(v);
  }
  return m;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) throw GraphError("graph order must be in 0..64, got " + std::to_string(n));
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += popcount(r);
  return twice / 2;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) throw GraphError("vertex id out of range: " + std::to_string(v));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for_each_vertex(neighbors(u) & ~low_bits(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertices();
  InducedSubgraph sub{Graph(popcount(keep)), to_list(keep)};
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) index[static_cast<std::size_t>(sub.original[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    for_each_vertex(g.neighbors(sub.original[i]) & keep, [&](Vertex w) {
      int j = index[static_cast<std::size_t>(w)];
      if (static_cast<int>(i) < j) sub.graph.add_edge(static_cast<Vertex>(i), j);
    });
  }
  return sub;
}

VertexMask reach(const Graph& g, Vertex start, VertexMask within) {
  VertexMask seen = bit(start) & within;
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g, VertexMask within) {
  within &= g.vertices();
  if (within == 0) return true;
  return reach(g, std::countr_zero(within), within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::vector<VertexMask> component_masks(const Graph& g, VertexMask within) {
  within &= g.vertices();
  std::vector<VertexMask> out;
  while (within != 0) {
    VertexMask c = reach(g, std::countr_zero(within), within);
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

std::vector<InducedSubgraph> connected_components(const Graph& g) {
  std::vector<InducedSubgraph> out;
  for (VertexMask c : component_masks(g, g.vertices())) out.push_back(induced_subgraph(g, c));
  return out;
}

VertexMask leaf_mask(const Graph& g, VertexMask within) {
  VertexMask out = 0;
  for_each_vertex(within & g.vertices(), [&](Vertex v) {
    if (popcount(g.neighbors(v) & within) == 1) out |= bit(v);
  });
  return out;
}

VertexList leaves(const Graph& g) { return to_list(leaf_mask(g, g.vertices())); }

int leaf_count(const Graph& g) { return popcount(leaf_mask(g, g.vertices())); }

bool is_path(const Graph& g, VertexMask within) {
  within &= g.vertices();
  if (within == 0 || !is_connected(g, within)) return false;
  int edges2 = 0;
  bool ok = true;
  for_each_vertex(within, [&](Vertex v) {
    int d = popcount(g.neighbors(v) & within);
    if (d > 2) ok = false;
    edges2 += d;
  });
  return ok && edges2 / 2 == popcount(within) - 1;
}

bool is_path(const Graph& g) { return is_path(g, g.vertices()); }

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Tree: return "tree";
    case GraphKind::Unicyclic: return "unicyclic";
    case GraphKind::Other: return "other";
  }
  return "other";
}

GraphClass classify(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw GraphError("classify requires a connected graph");
  int rank = g.size() - g.order() + 1;
  GraphKind kind = rank == 0 ? GraphKind::Tree : rank == 1 ? GraphKind::Unicyclic : GraphKind::Other;
  return {kind, rank};
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  if (!is_connected(g)) throw GraphError("distances require a connected graph");
  d_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (Vertex s = 0; s < n_; ++s) {
    int* row = d_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n_);
    VertexMask seen = bit(s);
    VertexMask frontier = seen;
    for (int depth = 1; frontier != 0; ++depth) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~seen;
      seen |= frontier;
      for_each_vertex(frontier, [&](Vertex v) { row[v] = depth; });
    }
  }
}

int DistanceMatrix::eccentricity(Vertex v) const {
  int best = 0;
  for (Vertex u = 0; u < n_; ++u) best = std::max(best, (*this)(v, u));
  return best;
}

// graph6: one size byte (n + 63) followed by the upper triangle in column
// order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte
// offset by 63, final byte zero-padded.
Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 string");

  auto value_of = [](char c) {
    int x = static_cast<unsigned char>(c) - 63;
    if (x < 0 || x > 63) throw Graph6Error(std::string("invalid graph6 character '") + c + "'");
    return x;
  };
  int n = value_of(line[0]);
  if (n > kMaxGraph6Vertices) throw Graph6Error("graph6 size byte must encode n <= 62");

  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (line.size() - 1 < bytes) throw Graph6Error("graph6 string too short for n=" + std::to_string(n));
  if (line.size() - 1 > bytes) throw Graph6Error("trailing characters after graph6 data");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = value_of(line[1 + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((value_of(line[1 + k / 6]) >> (5 - k % 6)) & 1) throw Graph6Error("nonzero graph6 padding bits");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxGraph6Vertices) throw Graph6Error("graph6 encoding supports n <= 62");
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

}  // namespace zsdl
