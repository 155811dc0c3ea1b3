#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsdl/graph.hpp"

namespace zsdl {

// Canonical labeled constructions.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
/// Spine u_0..u_{k+1} on ids 0..k+1, tooth leaf l_i on id k+1+i attached to u_i (1 <= i <= k).
Graph comb(int k);
/// comb(k) plus the edge u_0 u_{k+1}.
Graph comb_plus_e(int k);
inline Vertex comb_tooth(int k, int i) { return k + 1 + i; }
/// C_n on ids 0..n-1 with counts[i] leaves on cycle vertex i, leaves numbered in position order.
Graph sun_graph(std::span<const int> counts);
/// C_{2k} with one leaf on every even cycle position.
Graph alternating_sun(int k);
/// P_s x P_s; vertex (i, j) has id i*s + j.
Graph grid(int s);
/// Labeled tree on n >= 2 vertices from a Prufer sequence of length n - 2.
Graph prufer_decode(std::span<const int> sequence, int n);

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Comb,
  CombPlusE,
  PartialSun,
  AlternatingSun,
  Grid,
  PruferTrees,
  TreePlusE,
  LabeledConnected,
};

std::string_view to_string(FamilyKind kind);

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parsed family string such as `comb:k=5`, `sun:n=6,u=1,1,0,1,0,0`,
/// `grid:s=3` or `prufer-trees:n=2..8`. Integer parameters accept `lo..hi`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::map<std::string, std::string> params;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  std::pair<int, int> range(const std::string& key) const;
  std::pair<int, int> range_or(const std::string& key, std::pair<int, int> fallback) const;
  int value(const std::string& key) const;
  std::vector<int> list(const std::string& key) const;
};

/// One member of a family. `base` and `added_edge` are set for T+e members;
/// `parameter` carries the size parameter of parametric families (k, s, n).
struct FamilyItem {
  Graph graph;
  std::optional<Graph> base;
  std::optional<std::pair<Vertex, Vertex>> added_edge;
  int parameter = 0;
};

/// Random-access family. at() returns nullopt for indices that are filtered
/// out (e.g. disconnected bitmasks in the labeled-connected family).
class Enumeration {
 public:
  virtual ~Enumeration() = default;
  virtual std::uint64_t size() const = 0;
  virtual std::optional<FamilyItem> at(std::uint64_t index) const = 0;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0, n = size(); i < n; ++i)
      if (auto item = at(i)) f(*item);
  }
};

struct EnumerationLimits {
  bool allow_long = false;  ///< unlocks labeled-connected n = 7
};

/// All n^(n-2) labeled trees, in lexicographic Prufer order. 2 <= n <= 9.
class TreeEnumeration final : public Enumeration {
 public:
  explicit TreeEnumeration(int n);
  std::uint64_t size() const override { return count_; }
  std::optional<FamilyItem> at(std::uint64_t index) const override;
  Graph tree(std::uint64_t index) const;

 private:
  int n_;
  std::uint64_t count_;
};

/// Every (T, e) with T a labeled tree and e a non-edge of T. 3 <= n <= 8.
class TreePlusEEnumeration final : public Enumeration {
 public:
  explicit TreePlusEEnumeration(int n);
  std::uint64_t size() const override { return trees_.size() * per_tree_; }
  std::optional<FamilyItem> at(std::uint64_t index) const override;

 private:
  TreeEnumeration trees_;
  std::uint64_t per_tree_;
};

/// All labeled graphs on n vertices in edge-bitmask order, connected ones only.
class ConnectedEnumeration final : public Enumeration {
 public:
  ConnectedEnumeration(int n, EnumerationLimits limits = {});
  std::uint64_t size() const override { return std::uint64_t{1} << pairs_.size(); }
  std::optional<FamilyItem> at(std::uint64_t index) const override;

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

inline TreeEnumeration enumerate_trees(int n) { return TreeEnumeration(n); }
inline TreePlusEEnumeration enumerate_tree_plus_e(int n) { return TreePlusEEnumeration(n); }
inline ConnectedEnumeration enumerate_labeled_connected(int n, EnumerationLimits limits = {}) {
  return ConnectedEnumeration(n, limits);
}

/// The single graph a spec denotes (no ranges, no enumerated family).
Graph generate(const FamilySpec& spec);

/// Every member of the family, ranges expanded in ascending order.
std::unique_ptr<Enumeration> make_enumeration(const FamilySpec& spec, EnumerationLimits limits = {});

}  // namespace zsdl
