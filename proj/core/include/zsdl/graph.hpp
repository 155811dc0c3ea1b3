#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zsdl {

using Vertex = int;
using VertexList = std::vector<Vertex>;

/// Set of vertices of a Graph packed into one machine word (bit v <=> vertex v).
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxGraph6Vertices = 62;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
constexpr VertexMask low_bits(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }
constexpr int popcount(VertexMask m) { return std::popcount(m); }
constexpr bool contains(VertexMask m, Vertex v) { return (m >> v) & 1U; }

template <class F>
constexpr void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

VertexList to_list(VertexMask m);
VertexMask to_mask(std::span<const Vertex> vs);

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph6Error : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Simple undirected graph on vertices 0..n-1 with bitmask adjacency rows.
/// Self-loops and multi-edges are rejected at insertion.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;
  VertexMask vertices() const { return low_bits(order()); }

  VertexMask neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return popcount(neighbors(v)); }
  bool adjacent(Vertex u, Vertex v) const { return contains(neighbors(u), v); }

  void add_edge(Vertex u, Vertex v);
  Graph with_edge(Vertex u, Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexMask> rows_;
};

/// Induced subgraph relabeled to dense ids; original[i] is the id of vertex i in the parent.
struct InducedSubgraph {
  Graph graph;
  VertexList original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexMask keep);

/// Vertices reachable from `start` using only vertices in `within`.
VertexMask reach(const Graph& g, Vertex start, VertexMask within);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexMask within);

/// Component vertex sets of g restricted to `within`, ordered by smallest member.
std::vector<VertexMask> component_masks(const Graph& g, VertexMask within);
std::vector<InducedSubgraph> connected_components(const Graph& g);

VertexList leaves(const Graph& g);
VertexMask leaf_mask(const Graph& g, VertexMask within);
int leaf_count(const Graph& g);

bool is_path(const Graph& g);
bool is_path(const Graph& g, VertexMask within);

enum class GraphKind { Tree, Unicyclic, Other };

struct GraphClass {
  GraphKind kind;
  int cycle_rank;
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

std::string_view to_string(GraphKind kind);

/// Tree / Unicyclic / Other together with |E| - |V| + 1. Requires a connected graph.
GraphClass classify(const Graph& g);

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  int eccentricity(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

}  // namespace zsdl
