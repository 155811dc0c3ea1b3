#include "zsdl/tree_structure.hpp"

#include <algorithm>

namespace zsdl {

namespace {

void require_tree(const Graph& g, int min_order = 1) {
  if (!is_tree(g)) throw GraphError("input is not a tree");
  if (g.order() < min_order) throw GraphError("tree must have at least " + std::to_string(min_order) + " vertices");
}

// Vertices on the unique u-v path of a tree.
VertexMask tree_path(const DistanceMatrix& dm, Vertex u, Vertex v) {
  VertexMask out = 0;
  for (Vertex z = 0; z < dm.order(); ++z)
    if (dm(u, z) + dm(z, v) == dm(u, v)) out |= bit(z);
  return out;
}

struct ProfileMasks {
  VertexMask major = 0;
  VertexMask exterior_deg2 = 0;
  VertexMask interior_deg2 = 0;
  std::map<Vertex, int> terminal_degree;
};

ProfileMasks profile_masks(const Graph& t, const DistanceMatrix& dm) {
  ProfileMasks p;
  VertexMask deg2 = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) p.major |= bit(v);
    if (t.degree(v) == 2) deg2 |= bit(v);
  }
  for_each_vertex(p.major, [&](Vertex v) { p.terminal_degree[v] = 0; });
  for_each_vertex(leaf_mask(t, t.vertices()), [&](Vertex u) {
    int best = -1;
    Vertex owner = -1;
    bool tie = false;
    for_each_vertex(p.major, [&](Vertex v) {
      int d = dm(u, v);
      if (best < 0 || d < best) {
        best = d;
        owner = v;
        tie = false;
      } else if (d == best) {
        tie = true;
      }
    });
    if (owner < 0 || tie) return;
    ++p.terminal_degree[owner];
    p.exterior_deg2 |= tree_path(dm, u, owner) & deg2;
  });
  p.interior_deg2 = deg2 & ~p.exterior_deg2;
  return p;
}

}  // namespace

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

TreeProfile tree_profile(const Graph& t) {
  require_tree(t, 2);
  DistanceMatrix dm(t);
  ProfileMasks p = profile_masks(t, dm);
  TreeProfile out;
  out.leaves = leaves(t);
  out.major_vertices = to_list(p.major);
  out.terminal_degree = p.terminal_degree;
  for (auto [v, ter] : p.terminal_degree)
    if (ter > 0) out.exterior_major.push_back(v);
  out.interior_deg2 = to_list(p.interior_deg2);
  out.exterior_deg2 = to_list(p.exterior_deg2);
  out.major_count = popcount(p.major);
  return out;
}

PathCover path_cover_number(const Graph& t) {
  require_tree(t);
  const int n = t.order();
  const auto un = static_cast<std::size_t>(n);

  // Root at 0; order[] lists vertices so that parents precede children.
  std::vector<Vertex> parent(un, -1), order;
  order.reserve(un);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for_each_vertex(t.neighbors(v), [&](Vertex c) {
      if (c != parent[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(c)] = v;
        order.push_back(c);
      }
    });
  }

  // open[v]: max forest edges in v's subtree with v using <= 1 child edge
  // (so the parent edge may still join); closed[v]: <= 2 child edges.
  std::vector<int> open(un, 0), closed(un, 0);
  auto gain = [&](Vertex c) { return 1 + open[static_cast<std::size_t>(c)] - closed[static_cast<std::size_t>(c)]; };
  auto ranked_children = [&](Vertex v) {
    std::vector<Vertex> kids;
    for_each_vertex(t.neighbors(v), [&](Vertex c) {
      if (c != parent[static_cast<std::size_t>(v)] && gain(c) > 0) kids.push_back(c);
    });
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return gain(a) > gain(b); });
    return kids;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    int base = 0;
    for_each_vertex(t.neighbors(v), [&](Vertex c) {
      if (c != parent[static_cast<std::size_t>(v)]) base += closed[static_cast<std::size_t>(c)];
    });
    auto kids = ranked_children(v);
    int g1 = kids.size() > 0 ? gain(kids[0]) : 0;
    int g2 = kids.size() > 1 ? gain(kids[1]) : 0;
    open[static_cast<std::size_t>(v)] = base + g1;
    closed[static_cast<std::size_t>(v)] = base + g1 + g2;
  }

  // Reconstruct the chosen edges top-down.
  std::vector<VertexMask> forest(un, 0);
  std::vector<int> budget(un, 2);
  for (Vertex v : order) {
    auto kids = ranked_children(v);
    int take = std::min<int>(budget[static_cast<std::size_t>(v)], static_cast<int>(kids.size()));
    for (int i = 0; i < take; ++i) {
      Vertex c = kids[static_cast<std::size_t>(i)];
      forest[static_cast<std::size_t>(v)] |= bit(c);
      forest[static_cast<std::size_t>(c)] |= bit(v);
      budget[static_cast<std::size_t>(c)] = 1;
    }
  }

  PathCover out;
  VertexMask placed = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (contains(placed, s) || popcount(forest[static_cast<std::size_t>(s)]) > 1) continue;
    VertexList path{s};
    placed |= bit(s);
    for (VertexMask next = forest[static_cast<std::size_t>(s)] & ~placed; next != 0;) {
      Vertex v = std::countr_zero(next);
      path.push_back(v);
      placed |= bit(v);
      next = forest[static_cast<std::size_t>(v)] & ~placed;
    }
    out.paths.push_back(std::move(path));
  }
  out.count = static_cast<int>(out.paths.size());
  return out;
}

int sdim_tree_closed_form(const Graph& t) {
  require_tree(t, 2);
  return leaf_count(t) - 1;
}

bool z_equals_sdim_characterization(const Graph& t) {
  require_tree(t);
  if (t.order() < 2) return true;
  DistanceMatrix dm(t);
  ProfileMasks p = profile_masks(t, dm);
  VertexList majors = to_list(p.major);
  for (std::size_t i = 0; i < majors.size(); ++i)
    for (std::size_t j = i + 1; j < majors.size(); ++j)
      if ((tree_path(dm, majors[i], majors[j]) & p.interior_deg2) == 0) return false;
  return true;
}

bool dim_equals_z_characterization(const Graph& t) {
  require_tree(t);
  if (t.order() < 2) throw GraphError("characterization needs a tree with a major vertex");
  DistanceMatrix dm(t);
  ProfileMasks p = profile_masks(t, dm);
  if (p.major == 0) throw GraphError("characterization needs a tree with a major vertex; paths are handled separately");
  if (p.interior_deg2 != 0) return false;
  return std::all_of(p.terminal_degree.begin(), p.terminal_degree.end(), [](const auto& kv) { return kv.second >= 2; });
}

}  // namespace zsdl
