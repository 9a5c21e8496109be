#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lcf/graph.hpp"

namespace lcf {

// Isomorph reduction for sweep enumeration. Graphs are colored by
// per-vertex loop count; the canonical key is the minimum, over all
// vertex permutations, of (loop counts, edge bitset) packed into one
// word. Brute-force over n! permutations — fine at sweep sizes.

namespace detail {

inline int pair_index(int n, int u, int v) {
  // index of the unordered pair (u < v) in lexicographic order
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

}  // namespace detail

/// Canonical key of a looped simple graph with <= 3 loops per vertex
/// and n <= 8. Equal keys iff isomorphic as loop-colored graphs.
inline std::uint64_t canonical_key(const LoopedSimpleGraph& g) {
  const int n = g.vertex_count();
  const int pairs = n * (n - 1) / 2;
  if (n > 8) throw PreconditionViolated("canonical_key limited to 8 vertices");
  if (pairs + 2 * n > 64)
    throw PreconditionViolated("canonical_key encoding overflow");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t key = 0;
    for (int v = 0; v < n; ++v) {
      int c = g.loops_at(v);
      if (c > 3) throw PreconditionViolated("canonical_key: > 3 loops at a vertex");
      key |= static_cast<std::uint64_t>(c) << (2 * perm[v]);
    }
    for (const Edge& e : g.edges()) {
      int u = perm[e.u], v = perm[e.v];
      if (u > v) std::swap(u, v);
      key |= 1ULL << (2 * n + detail::pair_index(n, u, v));
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// All looped simple graphs on exactly n vertices with at most
/// max_loops_per_vertex loops at each vertex, one canonical
/// representative per isomorphism class, in key order.
inline std::vector<LoopedSimpleGraph> enumerate_looped_graphs(
    int n, int max_loops_per_vertex = 1) {
  if (n < 1 || n > 7)
    throw PreconditionViolated("enumeration supported for 1 <= n <= 7");
  if (max_loops_per_vertex < 0 || max_loops_per_vertex > 3)
    throw PreconditionViolated("loop bound must be in [0, 3]");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_of(pairs);
  for (int u = 0, idx = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx) pair_of[idx] = {u, v};

  std::vector<std::uint64_t> seen;
  std::vector<LoopedSimpleGraph> out;
  std::vector<int> loops(n, 0);
  std::uint64_t total_loop_patterns = 1;
  for (int v = 0; v < n; ++v)
    total_loop_patterns *= (max_loops_per_vertex + 1);

  for (std::uint64_t lp = 0; lp < total_loop_patterns; ++lp) {
    std::uint64_t rem = lp;
    for (int v = 0; v < n; ++v) {
      loops[v] = static_cast<int>(rem % (max_loops_per_vertex + 1));
      rem /= (max_loops_per_vertex + 1);
    }
    for (std::uint32_t em = 0; em < (1u << pairs); ++em) {
      LoopedSimpleGraph g(n);
      for (int idx = 0; idx < pairs; ++idx)
        if (em >> idx & 1) g.add_edge(pair_of[idx].first, pair_of[idx].second);
      for (int v = 0; v < n; ++v)
        for (int i = 0; i < loops[v]; ++i) g.add_loop(v);
      std::uint64_t key = canonical_key(g);
      if (!std::binary_search(seen.begin(), seen.end(), key)) {
        seen.insert(std::upper_bound(seen.begin(), seen.end(), key), key);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

/// Number of labeled graphs in the isomorphism class of g (n!/|Aut|).
inline std::uint64_t orbit_size(const LoopedSimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t aut = 0, total = 0;
  do {
    ++total;
    bool fixes = true;
    for (const Edge& e : g.edges())
      if (!g.has_edge(perm[e.u], perm[e.v])) {
        fixes = false;
        break;
      }
    if (fixes)
      for (int v = 0; v < n && fixes; ++v)
        if (g.loops_at(v) != g.loops_at(perm[v])) fixes = false;
    if (fixes) ++aut;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / aut;
}

}  // namespace lcf
