#include <algorithm>
#include <limits>

#include "zsdl/scan.hpp"
#include "zsdl/strong_resolving.hpp"
#include "zsdl/tree_structure.hpp"
#include "zsdl/unicyclic.hpp"
#include "zsdl/zero_forcing.hpp"

namespace zsdl {

namespace {

using Status = ClaimOutcome::Status;

ClaimOutcome verdict(bool ok, std::vector<NamedValue> values, std::vector<NamedValue> observations = {}) {
  return {ok ? Status::Holds : Status::Fails, std::move(values), std::move(observations)};
}

NamedValue nv(std::string name, std::int64_t v) { return {std::move(name), Rational(v)}; }

bool is_tree_graph(GraphFacts& f) { return f.connected() && f.graph_class().kind == GraphKind::Tree; }
bool is_unicyclic_graph(GraphFacts& f) { return f.connected() && f.graph_class().kind == GraphKind::Unicyclic; }

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// Side sizes (s <= t) when g is a complete bipartite graph K_{s,t}.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  Vertex any = 0;
  VertexMask side = g.neighbors(any);  // in K_{s,t} the far side is N(0)
  VertexMask other = g.vertices() & ~side;
  int s = popcount(other), t = popcount(side);
  bool ok = g.size() == s * t;
  for_each_vertex(other, [&](Vertex v) { ok = ok && g.neighbors(v) == side; });
  for_each_vertex(side, [&](Vertex v) { ok = ok && g.neighbors(v) == other; });
  if (!ok) return std::nullopt;
  return std::pair{std::min(s, t), std::max(s, t)};
}

ClaimOutcome named_values(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  const Graph& g = f.graph();
  if (g.order() < 2 || !f.connected()) return ClaimOutcome::skip();
  int n = g.order();
  std::vector<NamedValue> values{nv("Z", f.z()), nv("sdim", f.sdim())};
  if (is_path(g)) return verdict(f.z() == 1 && f.sdim() == 1, values);
  if (is_complete(g)) return verdict(f.z() == n - 1 && f.sdim() == n - 1, values);
  if (is_cycle(g)) return verdict(f.z() == 2 && f.sdim() == (n + 1) / 2, values);
  if (auto st = complete_bipartite_sides(g)) {
    int expect = st->first + st->second - 2;
    return verdict(f.z() == expect && f.sdim() == expect, values);
  }
  return ClaimOutcome::skip();
}

ClaimOutcome tree_z_equals_path_cover(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_tree_graph(f)) return ClaimOutcome::skip();
  return verdict(f.z() == f.path_cover(), {nv("Z", f.z()), nv("P", f.path_cover())});
}

ClaimOutcome tree_sdim_closed_form(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_tree_graph(f) || f.order() < 2) return ClaimOutcome::skip();
  return verdict(f.sdim() == sdim_tree_closed_form(f.graph()), {nv("sdim", f.sdim()), nv("sigma", f.sigma())});
}

ClaimOutcome tree_z_leq_sdim(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_tree_graph(f)) return ClaimOutcome::skip();
  return verdict(f.z() <= f.sdim(), {nv("Z", f.z()), nv("sdim", f.sdim())}, {nv("Z-sdim", f.z() - f.sdim())});
}

ClaimOutcome tree_dim_leq_z(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_tree_graph(f)) return ClaimOutcome::skip();
  return verdict(f.dim() <= f.z(), {nv("dim", f.dim()), nv("Z", f.z())});
}

ClaimOutcome tree_z_sdim_characterization(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_tree_graph(f)) return ClaimOutcome::skip();
  bool predicate = z_equals_sdim_characterization(f.graph());
  return verdict(predicate == (f.z() == f.sdim()),
                 {nv("predicate", predicate), nv("Z", f.z()), nv("sdim", f.sdim())});
}

ClaimOutcome tree_dim_z_characterization(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_tree_graph(f) || f.order() < 2) return ClaimOutcome::skip();
  std::vector<NamedValue> values{nv("dim", f.dim()), nv("Z", f.z())};
  if (is_path(f.graph())) return verdict(f.dim() == 1 && f.z() == 1, values);
  bool predicate = dim_equals_z_characterization(f.graph());
  values.push_back(nv("predicate", predicate));
  return verdict(predicate == (f.dim() == f.z()), values);
}

ClaimOutcome tree_path_cover_leaf_bound(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_tree_graph(f) || f.order() < 2) return ClaimOutcome::skip();
  return verdict(f.path_cover() <= f.sigma() - 1, {nv("P", f.path_cover()), nv("sigma", f.sigma())});
}

ClaimOutcome leaf_lower_bound(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!f.connected() || f.order() < 2) return ClaimOutcome::skip();
  return verdict(f.sdim() >= f.sigma() - 1, {nv("sdim", f.sdim()), nv("sigma", f.sigma())});
}

ClaimOutcome mmd_lower_bound(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!f.connected()) return ClaimOutcome::skip();
  return verdict(f.sdim() >= f.mmd_cover(), {nv("sdim", f.sdim()), nv("mmd_cover", f.mmd_cover())},
                 {nv("sdim-mmd_cover", f.sdim() - f.mmd_cover())});
}

ClaimOutcome dim_leq_sdim(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!f.connected()) return ClaimOutcome::skip();
  return verdict(f.dim() <= f.sdim(), {nv("dim", f.dim()), nv("sdim", f.sdim())});
}

ClaimOutcome sdim_one_iff_path(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!f.connected() || f.order() < 2) return ClaimOutcome::skip();
  bool path = is_path(f.graph());
  return verdict((f.sdim() == 1) == path, {nv("sdim", f.sdim()), nv("is_path", path)});
}

ClaimOutcome cut_vertex_bound(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!f.connected()) return ClaimOutcome::skip();
  const Graph& g = f.graph();
  bool any_cut = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (component_masks(g, g.vertices() & ~bit(v)).size() < 2) continue;
    any_cut = true;
    int bound = z_cut_vertex_lower_bound(g, v);
    if (bound > f.z()) return verdict(false, {nv("vertex", v), nv("bound", bound), nv("Z", f.z())});
  }
  if (!any_cut) return ClaimOutcome::skip();
  return verdict(true, {});
}

ClaimOutcome z_edge_addition(const FamilyItem&, GraphFacts& f, GraphFacts* base) {
  if (!f.connected() || f.order() < 2) return ClaimOutcome::skip();
  if (base != nullptr) {
    int lo = base->z() - 1, hi = base->z() + 1;
    return verdict(lo <= f.z() && f.z() <= hi, {nv("Z(G)", base->z()), nv("Z(G+e)", f.z())},
                   {nv("Z(G+e)-Z(G)", f.z() - base->z())});
  }
  const Graph& g = f.graph();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      int ze = zero_forcing_value(g.with_edge(u, v));
      if (ze < f.z() - 1 || ze > f.z() + 1)
        return verdict(false, {nv("u", u), nv("v", v), nv("Z(G)", f.z()), nv("Z(G+e)", ze)});
    }
  }
  return verdict(true, {});
}

ClaimOutcome sdim_edge_addition(const FamilyItem&, GraphFacts& f, GraphFacts* base) {
  if (base == nullptr || !is_unicyclic_graph(f)) return ClaimOutcome::skip();
  return verdict(f.sdim() >= base->sdim() - 2, {nv("sdim(T)", base->sdim()), nv("sdim(T+e)", f.sdim())},
                 {nv("sdim(T)-sdim(T+e)", base->sdim() - f.sdim())});
}

ClaimOutcome unicyclic_z_leq_sdim(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_unicyclic_graph(f)) return ClaimOutcome::skip();
  return verdict(f.z() <= f.sdim(), {nv("Z", f.z()), nv("sdim", f.sdim())}, {nv("Z-sdim", f.z() - f.sdim())});
}

ClaimOutcome partial_sun_formula(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  auto sun = detect_generalized_partial_sun(f.graph());
  if (!sun || !sun->partial) return ClaimOutcome::skip();
  int formula = partial_sun_Z(sun->cycle_length, sun->segments);
  return verdict(f.z() == formula, {nv("Z", f.z()), nv("formula", formula), nv("n", sun->cycle_length)});
}

ClaimOutcome generalized_sun_z_leq_sdim(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!detect_generalized_partial_sun(f.graph())) return ClaimOutcome::skip();
  return verdict(f.z() <= f.sdim(), {nv("Z", f.z()), nv("sdim", f.sdim())}, {nv("Z-sdim", f.z() - f.sdim())});
}

ClaimOutcome trim_contracts(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_unicyclic_graph(f)) return ClaimOutcome::skip();
  const Graph& g = f.graph();
  std::vector<NamedValue> observations;
  int worst_on_cycle = std::numeric_limits<int>::min();
  for (bool protect : {false, true}) {
    TrimTrace trace = trimmed_form(g, protect);
    auto deltas = trace_deltas(g, trace);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const TrimDelta& d = deltas[i];
      if (!d.holds())
        return verdict(false, {nv("protect", protect), nv("step", static_cast<std::int64_t>(i)),
                               nv("kind", static_cast<std::int64_t>(d.step.kind)), nv("target", d.step.targets.front()),
                               nv("dZ", d.dz()), nv("dsdim", d.dsdim())});
      if (d.step.kind == TrimKind::AppropriateVertex && d.on_cycle) worst_on_cycle = std::max(worst_on_cycle, d.dsdim());
    }
  }
  if (worst_on_cycle != std::numeric_limits<int>::min()) observations.push_back(nv("on-cycle appropriate dsdim", worst_on_cycle));
  return verdict(true, {}, std::move(observations));
}

ClaimOutcome trim_reaches_sun(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!is_unicyclic_graph(f)) return ClaimOutcome::skip();
  const Graph& g = f.graph();
  TrimTrace trace = trimmed_form(g, true);
  VertexMask core = cycle_core(g, trace.remaining);
  bool ok = static_cast<int>(trace.steps.size()) <= g.order() && core != 0;
  if (ok) {
    VertexMask comp = reach(g, std::countr_zero(core), trace.remaining);
    ok = detect_generalized_partial_sun(induced_subgraph(g, comp).graph).has_value();
  }
  return verdict(ok, {nv("steps", static_cast<std::int64_t>(trace.steps.size()))});
}

ClaimOutcome general_bound(const FamilyItem&, GraphFacts& f, GraphFacts*) {
  if (!f.connected()) return ClaimOutcome::skip();
  int r = f.graph_class().cycle_rank;
  std::vector<NamedValue> obs;
  if (r >= 1) obs.push_back({"(Z-sdim)/r", Rational(f.z() - f.sdim(), r)});
  return verdict(f.z() <= f.sdim() + 3 * r, {nv("Z", f.z()), nv("sdim", f.sdim()), nv("r", r)}, std::move(obs));
}

ClaimOutcome comb_sharpness(const FamilyItem& item, GraphFacts& f, GraphFacts*) {
  int k = item.parameter;
  if (k < 4 || f.graph() != comb(k)) return ClaimOutcome::skip();
  Graph plus = comb_plus_e(k);
  int sdim_plus = strong_metric_dimension_value(plus);
  VertexList teeth;
  for (int i = 1; i <= k - 1; ++i) teeth.push_back(comb_tooth(k, i));
  bool teeth_resolve = is_strong_resolving_set(plus, teeth);
  return verdict(f.sdim() == k + 1 && sdim_plus == k - 1 && teeth_resolve,
                 {nv("k", k), nv("sdim(T)", f.sdim()), nv("sdim(T+e)", sdim_plus), nv("teeth_resolve", teeth_resolve)});
}

ClaimOutcome alternating_sun_equality(const FamilyItem& item, GraphFacts& f, GraphFacts*) {
  int k = item.parameter;
  if (k < 3 || k % 2 == 0 || f.graph() != alternating_sun(k)) return ClaimOutcome::skip();
  return verdict(f.z() == k && f.sdim() == k, {nv("k", k), nv("Z", f.z()), nv("sdim", f.sdim())});
}

ClaimOutcome grid_example(const FamilyItem& item, GraphFacts& f, GraphFacts*) {
  int s = item.parameter;
  if (s < 2 || f.graph() != grid(s)) return ClaimOutcome::skip();
  int r = f.graph_class().cycle_rank;
  Rational ratio(f.z() - f.sdim(), r);
  bool ok = f.z() == s && f.sdim() == 2 && r == (s - 1) * (s - 1) && ratio == Rational(s - 2, (s - 1) * (s - 1));
  return verdict(ok, {nv("s", s), nv("Z", f.z()), nv("sdim", f.sdim()), nv("r", r)}, {{"(Z-sdim)/r", ratio}});
}

std::vector<Claim> build_registry() {
  return {
      {"CLM-NAMED", "Z = sdim = 1, n-1, s+t-2 on P_n, K_n, K_{s,t}; Z(C_n) = 2 and sdim(C_n) = ceil(n/2)",
       "complete:n=2..7", named_values},
      {"CLM-T-ZP", "Z(T) = P(T) for every tree", "prufer-trees:n=2..9", tree_z_equals_path_cover},
      {"CLM-T-SDIM", "sdim(T) = sigma(T) - 1 for every tree", "prufer-trees:n=2..9", tree_sdim_closed_form},
      {"CLM-T-LEQ", "Z(T) <= sdim(T) for every tree", "prufer-trees:n=2..9", tree_z_leq_sdim},
      {"CLM-T-DIM", "dim(T) <= Z(T) for every tree", "prufer-trees:n=2..9", tree_dim_leq_z},
      {"CLM-T-ZSDIM-CHAR",
       "Z(T) = sdim(T) iff every path between two major vertices holds an interior degree-two vertex",
       "prufer-trees:n=2..9", tree_z_sdim_characterization},
      {"CLM-T-DIMZ-CHAR",
       "dim(T) = Z(T) iff T has no interior degree-two vertex and every major vertex has terminal degree >= 2",
       "prufer-trees:n=2..9", tree_dim_z_characterization},
      {"CLM-T-PSIGMA", "P(T) <= sigma(T) - 1 for every tree", "prufer-trees:n=2..9", tree_path_cover_leaf_bound},
      {"CLM-LEAF", "every strong resolving set holds all but one leaf: sdim(G) >= sigma(G) - 1",
       "labeled-connected:n=2..6", leaf_lower_bound},
      {"CLM-MMD", "every strong resolving set covers each MMD pair: sdim(G) >= vertex cover of MMD pairs",
       "labeled-connected:n=2..6", mmd_lower_bound},
      {"CLM-DIM-SDIM", "dim(G) <= sdim(G)", "labeled-connected:n=2..6", dim_leq_sdim},
      {"CLM-PATH", "sdim(G) = 1 iff G is a path", "labeled-connected:n=2..6", sdim_one_iff_path},
      {"CLM-CUT", "Z(G) >= sum Z(G_i) - k + 1 over the k branches at a cut vertex", "labeled-connected:n=2..6",
       cut_vertex_bound},
      {"CLM-ZE", "Z(G) - 1 <= Z(G+e) <= Z(G) + 1 for a non-edge e", "tree-plus-e:n=3..8", z_edge_addition},
      {"CLM-E-SDIM", "sdim(T+e) >= sdim(T) - 2 for a tree T and non-edge e", "tree-plus-e:n=3..8",
       sdim_edge_addition},
      {"CLM-U-LEQ", "Z(G) <= sdim(G) for every unicyclic G", "tree-plus-e:n=3..8", unicyclic_z_leq_sdim},
      {"CLM-SUN", "Z(H) = max{2, sum ceil(|U_i|/2)} for a partial n-sun with segments U_i", "sun:n=3..7",
       partial_sun_formula},
      {"CLM-GSUN", "Z(H) <= sdim(H) for every generalized partial n-sun", "sun:n=3..6,max=2",
       generalized_sun_z_leq_sdim},
      {"CLM-TRIM",
       "trimming a unicyclic graph: peripheral leaf keeps Z and sdim; isolated path P lowers Z by 1 and sdim by "
       "sdim(P); appropriate vertex raises Z by 1 and, off the cycle, sdim by at most 1",
       "tree-plus-e:n=3..8", trim_contracts},
      {"CLM-TRIM-SUN", "trimming without touching the cycle ends in a generalized partial n-sun",
       "tree-plus-e:n=3..8", trim_reaches_sun},
      {"CLM-GEN", "Z(G) <= sdim(G) + 3 r(G) for every connected G", "labeled-connected:n=2..6", general_bound},
      {"CLM-COMB", "comb with k >= 4 teeth: sdim(T) = k + 1, sdim(T+e) = k - 1 via teeth l_1..l_{k-1}",
       "comb:k=4..6", comb_sharpness},
      {"CLM-ASUN", "alternating 2k-sun, k odd: Z(G) = sdim(G) = k", "alt-sun:k=3..7", alternating_sun_equality},
      {"CLM-GRID", "Z(P_s x P_s) = s, sdim = 2, r = (s-1)^2", "grid:s=2..4", grid_example},
  };
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownClaimError("unknown claim '" + std::string(id) + "'");
}

}  // namespace zsdl
