#pragma once

#include <map>
#include <vector>

#include "zsdl/graph.hpp"

namespace zsdl {

/// Structural vocabulary of a tree.
///
/// A leaf u is a terminal vertex of the major vertex v when d(u,v) < d(u,w)
/// for every other major vertex w; ties leave u terminal to no major vertex.
/// A degree-2 vertex is exterior when it lies on the path from some terminal
/// vertex to its major vertex, and interior otherwise.
struct TreeProfile {
  VertexList leaves;
  VertexList major_vertices;
  std::map<Vertex, int> terminal_degree;  ///< keyed by every major vertex
  VertexList exterior_major;
  VertexList interior_deg2;
  VertexList exterior_deg2;
  int major_count = 0;
};

struct PathCover {
  std::vector<VertexList> paths;  ///< each starts at its smaller endpoint; sorted by first vertex
  int count = 0;
};

bool is_tree(const Graph& g);

TreeProfile tree_profile(const Graph& t);

/// Minimum path cover of a tree via a maximum spanning linear forest.
PathCover path_cover_number(const Graph& t);

/// sigma(T) - 1.
int sdim_tree_closed_form(const Graph& t);

/// Every path between two major vertices passes through an interior degree-2
/// vertex. Vacuously true with fewer than two major vertices.
bool z_equals_sdim_characterization(const Graph& t);

/// No interior degree-2 vertex and every major vertex has terminal degree >= 2.
/// Rejects paths (trees without a major vertex).
bool dim_equals_z_characterization(const Graph& t);

}  // namespace zsdl
