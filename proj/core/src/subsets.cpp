#include "zsdl/subsets.hpp"

#include <algorithm>
#include <vector>

namespace zsdl {

namespace {

struct HittingSearch {
  int n;
  std::span<const VertexMask> constraints;

  // Depth-first over prefixes in lexicographic order; the first completion
  // found is therefore the lexicographically first hitting set.
  std::optional<VertexMask> extend(VertexMask chosen, int start, int remaining) const {
    int limit = n - remaining;  // the next element can be at most this
    bool all_hit = true;
    VertexMask tail = low_bits(n) & ~low_bits(start);
    for (VertexMask c : constraints) {
      if (c & chosen) continue;
      all_hit = false;
      VertexMask reachable = c & tail;
      if (reachable == 0) return std::nullopt;
      limit = std::min(limit, 63 - std::countl_zero(reachable));
    }
    if (all_hit) {
      if (n - start < remaining) return std::nullopt;
      return chosen | (low_bits(start + remaining) & ~low_bits(start));
    }
    if (remaining == 0) return std::nullopt;
    for (int v = start; v <= limit; ++v) {
      if (auto found = extend(chosen | bit(v), v + 1, remaining - 1)) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<VertexMask> first_hitting_set(int n, std::span<const VertexMask> constraints, int k) {
  if (k < 0 || k > n) return std::nullopt;
  return HittingSearch{n, constraints}.extend(0, 0, k);
}

HittingSet minimum_hitting_set(int n, std::span<const VertexMask> constraints, int start_k) {
  for (int k = std::max(start_k, 0); k <= n; ++k) {
    if (auto w = first_hitting_set(n, constraints, k)) return {k, *w};
  }
  throw GraphError("constraint system has no hitting set (empty constraint)");
}

}  // namespace zsdl
