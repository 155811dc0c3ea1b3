#pragma once

#include <array>
#include <optional>
#include <span>

#include "zsdl/graph.hpp"

namespace zsdl {

/// Visits every k-subset of {0..n-1} in lexicographic order of the sorted
/// member lists ({0,1,2} < {0,1,3} < ... < {0,2,3} < ...). Stops at the first
/// subset for which visit returns true and returns it.
template <class Visit>
std::optional<VertexMask> first_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return std::nullopt;
  if (k == 0) return visit(VertexMask{0}) ? std::optional<VertexMask>(0) : std::nullopt;
  std::array<int, kMaxVertices> idx{};
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexMask m = 0;
    for (int i = 0; i < k; ++i) m |= bit(idx[static_cast<std::size_t>(i)]);
    if (visit(m)) return m;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <class Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  first_subset(n, k, [&](VertexMask m) {
    visit(m);
    return false;
  });
}

/// Lexicographically first k-subset of {0..n-1} meeting every constraint mask,
/// or nullopt when none exists. An empty constraint can never be met.
std::optional<VertexMask> first_hitting_set(int n, std::span<const VertexMask> constraints, int k);

/// Smallest k >= start_k admitting a hitting set, with its lexicographically first witness.
struct HittingSet {
  int size;
  VertexMask witness;
};
HittingSet minimum_hitting_set(int n, std::span<const VertexMask> constraints, int start_k = 0);

}  // namespace zsdl
