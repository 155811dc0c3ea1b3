#include "zsdl/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace zsdl {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw FamilyError(message);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw FamilyError("bad integer '" + std::string(s) + "' for " + std::string(what));
  return v;
}

struct KindName {
  FamilyKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::CompleteBipartite, "bipartite"},
    {FamilyKind::Comb, "comb"},
    {FamilyKind::CombPlusE, "comb-plus-e"},
    {FamilyKind::PartialSun, "sun"},
    {FamilyKind::AlternatingSun, "alt-sun"},
    {FamilyKind::Grid, "grid"},
    {FamilyKind::PruferTrees, "prufer-trees"},
    {FamilyKind::TreePlusE, "tree-plus-e"},
    {FamilyKind::LabeledConnected, "labeled-connected"},
};

class ConcatEnumeration final : public Enumeration {
 public:
  explicit ConcatEnumeration(std::vector<std::unique_ptr<Enumeration>> parts) : parts_(std::move(parts)) {}

  std::uint64_t size() const override {
    std::uint64_t total = 0;
    for (const auto& p : parts_) total += p->size();
    return total;
  }

  std::optional<FamilyItem> at(std::uint64_t index) const override {
    for (const auto& p : parts_) {
      if (index < p->size()) return p->at(index);
      index -= p->size();
    }
    throw FamilyError("family index out of range");
  }

 private:
  std::vector<std::unique_ptr<Enumeration>> parts_;
};

/// One graph per value of an integer parameter.
class ParametricEnumeration final : public Enumeration {
 public:
  ParametricEnumeration(std::vector<int> values, std::function<Graph(int)> make)
      : values_(std::move(values)), make_(std::move(make)) {}

  std::uint64_t size() const override { return values_.size(); }
  std::optional<FamilyItem> at(std::uint64_t index) const override {
    int p = values_.at(index);
    return FamilyItem{make_(p), std::nullopt, std::nullopt, p};
  }

 private:
  std::vector<int> values_;
  std::function<Graph(int)> make_;
};

/// All leaf layouts with counts in 0..max_count on C_n.
class SunLayoutEnumeration final : public Enumeration {
 public:
  SunLayoutEnumeration(int n, int max_count) : n_(n), base_(max_count + 1) {
    require(n >= 3, "sun needs n >= 3");
    require(max_count >= 0, "sun max leaf count must be >= 0");
    require(n + n * max_count <= kMaxVertices, "sun family too large");
  }

  std::uint64_t size() const override { return ipow(static_cast<std::uint64_t>(base_), n_); }
  std::optional<FamilyItem> at(std::uint64_t index) const override {
    std::vector<int> counts(static_cast<std::size_t>(n_));
    for (int i = n_ - 1; i >= 0; --i) {
      counts[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(base_));
      index /= static_cast<std::uint64_t>(base_);
    }
    return FamilyItem{sun_graph(counts), std::nullopt, std::nullopt, n_};
  }

 private:
  int n_;
  int base_;
};

std::vector<int> expand(std::pair<int, int> r) {
  std::vector<int> out;
  for (int v = r.first; v <= r.second; ++v) out.push_back(v);
  return out;
}

std::unique_ptr<Enumeration> concat_over(std::pair<int, int> r, const std::function<std::unique_ptr<Enumeration>(int)>& make) {
  std::vector<std::unique_ptr<Enumeration>> parts;
  for (int v : expand(r)) parts.push_back(make(v));
  if (parts.size() == 1) return std::move(parts.front());
  return std::make_unique<ConcatEnumeration>(std::move(parts));
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite needs s, t >= 1");
  Graph g(s + t);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = s; v < s + t; ++v) g.add_edge(u, v);
  return g;
}

Graph comb(int k) {
  require(k >= 1, "comb needs k >= 1");
  Graph g(2 * k + 2);
  for (Vertex v = 0; v <= k; ++v) g.add_edge(v, v + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(i, comb_tooth(k, i));
  return g;
}

Graph comb_plus_e(int k) { return comb(k).with_edge(0, k + 1); }

Graph sun_graph(std::span<const int> counts) {
  const int n = static_cast<int>(counts.size());
  require(n >= 3, "sun needs a cycle of length >= 3");
  int leaves = 0;
  for (int c : counts) {
    require(c >= 0, "sun leaf counts must be >= 0");
    leaves += c;
  }
  require(n + leaves <= kMaxVertices, "sun has too many vertices");
  Graph g(n + leaves);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  Vertex next = n;
  for (Vertex v = 0; v < n; ++v)
    for (int j = 0; j < counts[static_cast<std::size_t>(v)]; ++j) g.add_edge(v, next++);
  return g;
}

Graph alternating_sun(int k) {
  require(k >= 2, "alternating sun needs k >= 2");
  std::vector<int> counts(static_cast<std::size_t>(2 * k), 0);
  for (int i = 0; i < 2 * k; i += 2) counts[static_cast<std::size_t>(i)] = 1;
  return sun_graph(counts);
}

Graph grid(int s) {
  require(s >= 1 && s * s <= kMaxVertices, "grid needs 1 <= s <= 8");
  Graph g(s * s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (j + 1 < s) g.add_edge(i * s + j, i * s + j + 1);
      if (i + 1 < s) g.add_edge(i * s + j, (i + 1) * s + j);
    }
  }
  return g;
}

Graph prufer_decode(std::span<const int> sequence, int n) {
  require(n >= 2 && static_cast<int>(sequence.size()) == n - 2, "Prufer sequence must have length n - 2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int a : sequence) {
    require(a >= 0 && a < n, "Prufer entry out of range");
    ++degree[static_cast<std::size_t>(a)];
  }
  Graph g(n);
  for (int a : sequence) {
    Vertex leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    g.add_edge(leaf, a);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(a)];
  }
  Vertex u = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      g.add_edge(u, v);
      break;
    }
  }
  return g;
}

std::string_view to_string(FamilyKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  auto it = std::find_if(std::begin(kKindNames), std::end(kKindNames), [&](const KindName& kn) { return kn.name == name; });
  if (it == std::end(kKindNames)) throw FamilyError("unknown family '" + std::string(name) + "'");
  spec.kind = it->kind;
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  std::string current;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = token.find('=');
    if (eq != std::string_view::npos) {
      current = std::string(token.substr(0, eq));
      if (current.empty()) throw FamilyError("empty parameter name in '" + std::string(text) + "'");
      if (spec.params.count(current)) throw FamilyError("duplicate parameter '" + current + "'");
      spec.params[current] = std::string(token.substr(eq + 1));
    } else {
      // a bare token continues the previous list-valued parameter
      if (current.empty()) throw FamilyError("malformed family parameters in '" + std::string(text) + "'");
      spec.params[current] += "," + std::string(token);
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(zsdl::to_string(kind));
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep;
    out += k + "=" + v;
    sep = ',';
  }
  return out;
}

std::pair<int, int> FamilySpec::range(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw FamilyError("family " + std::string(zsdl::to_string(kind)) + " needs parameter '" + key + "'");
  std::string_view v = it->second;
  auto dots = v.find("..");
  if (dots == std::string_view::npos) {
    int x = parse_int(v, key);
    return {x, x};
  }
  int lo = parse_int(v.substr(0, dots), key);
  int hi = parse_int(v.substr(dots + 2), key);
  if (lo > hi) throw FamilyError("empty range for '" + key + "'");
  return {lo, hi};
}

std::pair<int, int> FamilySpec::range_or(const std::string& key, std::pair<int, int> fallback) const {
  return has(key) ? range(key) : fallback;
}

int FamilySpec::value(const std::string& key) const {
  auto [lo, hi] = range(key);
  if (lo != hi) throw FamilyError("parameter '" + key + "' must be a single value here");
  return lo;
}

std::vector<int> FamilySpec::list(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw FamilyError("family needs parameter '" + key + "'");
  std::vector<int> out;
  std::string_view v = it->second;
  while (true) {
    auto comma = v.find(',');
    out.push_back(parse_int(v.substr(0, comma), key));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

TreeEnumeration::TreeEnumeration(int n) : n_(n) {
  require(n >= 2 && n <= 9, "labeled tree enumeration supports 2 <= n <= 9");
  count_ = ipow(static_cast<std::uint64_t>(n), n - 2);
}

Graph TreeEnumeration::tree(std::uint64_t index) const {
  std::vector<int> seq(static_cast<std::size_t>(n_ - 2));
  for (int i = n_ - 3; i >= 0; --i) {
    seq[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n_));
    index /= static_cast<std::uint64_t>(n_);
  }
  return prufer_decode(seq, n_);
}

std::optional<FamilyItem> TreeEnumeration::at(std::uint64_t index) const {
  return FamilyItem{tree(index), std::nullopt, std::nullopt, n_};
}

TreePlusEEnumeration::TreePlusEEnumeration(int n) : trees_(std::clamp(n, 2, 9)) {
  require(n >= 3 && n <= 8, "tree-plus-e enumeration supports 3 <= n <= 8");
  per_tree_ = static_cast<std::uint64_t>(n * (n - 1) / 2 - (n - 1));
}

std::optional<FamilyItem> TreePlusEEnumeration::at(std::uint64_t index) const {
  Graph t = trees_.tree(index / per_tree_);
  std::uint64_t skip = index % per_tree_;
  for (Vertex u = 0; u < t.order(); ++u) {
    for (Vertex v = u + 1; v < t.order(); ++v) {
      if (t.adjacent(u, v)) continue;
      if (skip-- == 0) return FamilyItem{t.with_edge(u, v), t, std::pair{u, v}, t.order()};
    }
  }
  throw FamilyError("tree-plus-e index out of range");
}

ConnectedEnumeration::ConnectedEnumeration(int n, EnumerationLimits limits) : n_(n) {
  require(n >= 2 && n <= 7, "labeled connected enumeration supports 2 <= n <= 7");
  require(n < 7 || limits.allow_long, "labeled connected n = 7 requires ZSDL_LONG=1");
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
}

std::optional<FamilyItem> ConnectedEnumeration::at(std::uint64_t index) const {
  Graph g(n_);
  for (std::size_t b = 0; b < pairs_.size(); ++b)
    if ((index >> b) & 1U) g.add_edge(pairs_[b].first, pairs_[b].second);
  if (!is_connected(g)) return std::nullopt;
  return FamilyItem{std::move(g), std::nullopt, std::nullopt, n_};
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path: return path_graph(spec.value("n"));
    case FamilyKind::Cycle: return cycle_graph(spec.value("n"));
    case FamilyKind::Complete: return complete_graph(spec.value("n"));
    case FamilyKind::CompleteBipartite: return complete_bipartite(spec.value("s"), spec.value("t"));
    case FamilyKind::Comb: return comb(spec.value("k"));
    case FamilyKind::CombPlusE: return comb_plus_e(spec.value("k"));
    case FamilyKind::AlternatingSun: return alternating_sun(spec.value("k"));
    case FamilyKind::Grid: return grid(spec.value("s"));
    case FamilyKind::PartialSun: {
      auto counts = spec.list("u");
      if (spec.has("n")) require(spec.value("n") == static_cast<int>(counts.size()), "sun layout length must equal n");
      return sun_graph(counts);
    }
    case FamilyKind::PruferTrees:
    case FamilyKind::TreePlusE:
    case FamilyKind::LabeledConnected:
      break;
  }
  throw FamilyError("family '" + spec.to_string() + "' does not denote a single graph");
}

std::unique_ptr<Enumeration> make_enumeration(const FamilySpec& spec, EnumerationLimits limits) {
  using Make = std::function<std::unique_ptr<Enumeration>(int)>;
  auto parametric = [&](const std::string& key, std::function<Graph(int)> make) -> std::unique_ptr<Enumeration> {
    return std::make_unique<ParametricEnumeration>(expand(spec.range(key)), std::move(make));
  };
  switch (spec.kind) {
    case FamilyKind::Path: return parametric("n", path_graph);
    case FamilyKind::Cycle: return parametric("n", cycle_graph);
    case FamilyKind::Complete: return parametric("n", complete_graph);
    case FamilyKind::Comb: return parametric("k", comb);
    case FamilyKind::CombPlusE: return parametric("k", comb_plus_e);
    case FamilyKind::AlternatingSun: return parametric("k", alternating_sun);
    case FamilyKind::Grid: return parametric("s", grid);
    case FamilyKind::CompleteBipartite: {
      auto ts = spec.range("t");
      return concat_over(spec.range("s"), Make([ts](int s) -> std::unique_ptr<Enumeration> {
        return std::make_unique<ParametricEnumeration>(expand(ts), [s](int t) { return complete_bipartite(s, t); });
      }));
    }
    case FamilyKind::PartialSun:
      if (spec.has("u")) {
        Graph g = generate(spec);
        int n = static_cast<int>(spec.list("u").size());
        return std::make_unique<ParametricEnumeration>(std::vector<int>{n}, [g](int) { return g; });
      }
      return concat_over(spec.range("n"), Make([max = spec.has("max") ? spec.value("max") : 1](int n) {
        return std::make_unique<SunLayoutEnumeration>(n, max);
      }));
    case FamilyKind::PruferTrees:
      return concat_over(spec.range("n"), Make([](int n) { return std::make_unique<TreeEnumeration>(n); }));
    case FamilyKind::TreePlusE:
      return concat_over(spec.range("n"), Make([](int n) { return std::make_unique<TreePlusEEnumeration>(n); }));
    case FamilyKind::LabeledConnected:
      return concat_over(spec.range("n"),
                               Make([limits](int n) { return std::make_unique<ConnectedEnumeration>(n, limits); }));
  }
  throw FamilyError("unsupported family");
}

}  // namespace zsdl
