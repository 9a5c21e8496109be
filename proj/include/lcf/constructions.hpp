#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcf/balance.hpp"
#include "lcf/graph.hpp"

namespace lcf {

/// A d-dimensional k-loop extension: delete k loops at distinct
/// vertices, add a new vertex with d+k new elements — one mandatory
/// edge to each deleted-loop vertex, at least k loops at the new
/// vertex, and the remaining elements split between further loops and
/// edges to `extra_edge_targets`.
struct ExtensionStep {
  int k = 0;
  std::vector<Loop> deleted_loops;
  int new_vertex_loops = 0;
  std::vector<VertexId> extra_edge_targets;
};

inline void validate_step(const LoopedSimpleGraph& g, int d,
                          const ExtensionStep& step) {
  if (d < 1) throw MalformedStep("dimension must be >= 1");
  if (step.k < 0 || step.k > d)
    throw MalformedStep("k must lie in [0, d]");
  if (static_cast<int>(step.deleted_loops.size()) != step.k)
    throw MalformedStep("must delete exactly k loops");
  std::vector<VertexId> deleted_at;
  for (const Loop& l : step.deleted_loops) {
    if (!g.has_loop(l)) throw MalformedStep("deleted loop not present");
    deleted_at.push_back(l.v);
  }
  std::sort(deleted_at.begin(), deleted_at.end());
  if (std::adjacent_find(deleted_at.begin(), deleted_at.end()) !=
      deleted_at.end())
    throw MalformedStep("deleted loops must sit at distinct vertices");
  if (step.new_vertex_loops < step.k)
    throw MalformedStep("at least k loops must be added at the new vertex");
  if (step.new_vertex_loops +
          static_cast<int>(step.extra_edge_targets.size()) !=
      d)
    throw MalformedStep(
        "new elements must number d+k: k mandatory edges plus d further "
        "loops/edges");
  std::vector<VertexId> targets = step.extra_edge_targets;
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw MalformedStep("extra edge targets must be distinct");
  for (VertexId v : targets) {
    if (!g.has_vertex(v)) throw MalformedStep("extra edge target out of range");
    if (std::binary_search(deleted_at.begin(), deleted_at.end(), v))
      throw MalformedStep(
          "extra edge duplicates a mandatory edge to a deleted-loop vertex");
  }
}

inline LoopedSimpleGraph k_loop_extension(const LoopedSimpleGraph& g, int d,
                                          const ExtensionStep& step) {
  validate_step(g, d, step);
  LoopedSimpleGraph out(g.vertex_count() + 1);
  const VertexId nv = g.vertex_count();
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  auto deleted = [&](const Loop& l) {
    return std::find(step.deleted_loops.begin(), step.deleted_loops.end(),
                     l) != step.deleted_loops.end();
  };
  for (const Loop& l : g.loops())
    if (!deleted(l)) out.add_loop(l.v);
  for (const Loop& l : step.deleted_loops) out.add_edge(nv, l.v);
  for (VertexId v : step.extra_edge_targets) out.add_edge(nv, v);
  for (int i = 0; i < step.new_vertex_loops; ++i) out.add_loop(nv);
  return out;
}

/// The loop-count hypothesis under which a k-loop extension preserves
/// L_d-rigidity: for k <= 2, every deleted-loop vertex carries at least
/// ceil((k-1)d/k) loops in g.
inline bool meets_preservation_hypothesis(const LoopedSimpleGraph& g, int d,
                                          const ExtensionStep& step) {
  if (step.k > 2 || step.k == 0) return true;
  int required = ((step.k - 1) * d + step.k - 1) / step.k;  // ceil
  for (const Loop& l : step.deleted_loops)
    if (g.loops_at(l.v) < required) return false;
  return true;
}

/// G_k: a k-cycle with one loop at each vertex.
inline LoopedSimpleGraph gen_Gk(int k) {
  if (k < 3) throw PreconditionViolated("G_k needs k >= 3");
  LoopedSimpleGraph g(k);
  for (int v = 0; v < k; ++v) {
    g.add_edge(v, (v + 1) % k);
    g.add_loop(v);
  }
  return g;
}

/// H_t: K_t on v_1..v_t; per i, a triangle {x_i, y_i, z_i}, the edge
/// v_i x_i, and one loop at each of y_i, z_i. Vertices are laid out as
/// v_i = i-1, then (x_i, y_i, z_i) = (t+3(i-1), +1, +2).
inline LoopedSimpleGraph gen_Ht(int t) {
  if (t < 3) throw PreconditionViolated("H_t needs t >= 3");
  LoopedSimpleGraph g(4 * t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) g.add_edge(i, j);
  for (int i = 0; i < t; ++i) {
    VertexId x = t + 3 * i, y = x + 1, z = x + 2;
    g.add_edge(x, y);
    g.add_edge(x, z);
    g.add_edge(y, z);
    g.add_edge(i, x);
    g.add_loop(y);
    g.add_loop(z);
  }
  return g;
}

namespace detail {

struct RootedTree {
  int n = 0;
  std::vector<int> level;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (parent, child)
  std::vector<VertexId> leaves;                      // level-s vertices, in order
};

// Levels 0..s; the root has k children, a vertex at level l in
// [1, s-1] has k-2 children when l is odd and k-1 when l is even;
// loops later go to the odd levels.
inline RootedTree build_Tks_shape(int k, int s) {
  RootedTree tree;
  std::vector<VertexId> frontier{0};
  tree.level.push_back(0);
  tree.n = 1;
  for (int l = 0; l < s; ++l) {
    std::vector<VertexId> next;
    int children = (l == 0) ? k : (l % 2 == 1 ? k - 2 : k - 1);
    for (VertexId parent : frontier)
      for (int c = 0; c < children; ++c) {
        VertexId child = tree.n++;
        tree.level.push_back(l + 1);
        tree.edges.push_back({parent, child});
        next.push_back(child);
      }
    frontier = std::move(next);
  }
  tree.leaves = frontier;
  return tree;
}

}  // namespace detail

/// T_k^s: the rooted tree of Example 3 with a loop at every odd-level
/// vertex.
inline LoopedSimpleGraph gen_Tks(int k, int s) {
  if (k < 3 || s < 1) throw PreconditionViolated("T_k^s needs k >= 3, s >= 1");
  detail::RootedTree tree = detail::build_Tks_shape(k, s);
  LoopedSimpleGraph g(tree.n);
  for (auto [p, c] : tree.edges) g.add_edge(p, c);
  for (VertexId v = 0; v < tree.n; ++v)
    if (tree.level[v] % 2 == 1) g.add_loop(v);
  return g;
}

/// G_k^s: k-1 copies of T_k^s (s odd) or k copies (s even), glued by
/// identifying the level-s vertices across copies — leaf j of one copy
/// with leaf j of every other — with loops deduplicated so each glued
/// vertex keeps at most one.
inline LoopedSimpleGraph gen_Gks(int k, int s) {
  if (k < 3 || s < 1) throw PreconditionViolated("G_k^s needs k >= 3, s >= 1");
  detail::RootedTree tree = detail::build_Tks_shape(k, s);
  const int copies = (s % 2 == 1) ? k - 1 : k;
  const int leaf_count = static_cast<int>(tree.leaves.size());
  const int inner_count = tree.n - leaf_count;

  std::vector<int> inner_index(tree.n, -1), leaf_index(tree.n, -1);
  for (int j = 0; j < leaf_count; ++j) leaf_index[tree.leaves[j]] = j;
  int next_inner = 0;
  for (VertexId v = 0; v < tree.n; ++v)
    if (leaf_index[v] < 0) inner_index[v] = next_inner++;

  auto mapped = [&](int copy, VertexId v) -> VertexId {
    if (leaf_index[v] >= 0) return copies * inner_count + leaf_index[v];
    return copy * inner_count + inner_index[v];
  };

  LoopedSimpleGraph g(copies * inner_count + leaf_count);
  for (int c = 0; c < copies; ++c)
    for (auto [p, ch] : tree.edges) g.add_edge(mapped(c, p), mapped(c, ch));
  for (VertexId v = 0; v < tree.n; ++v) {
    if (tree.level[v] % 2 != 1) continue;
    if (leaf_index[v] >= 0)
      g.add_loop(mapped(0, v));  // identified: keep a single loop
    else
      for (int c = 0; c < copies; ++c) g.add_loop(mapped(c, v));
  }
  return g;
}

/// The six named graphs of the balancedness discussion figures.
inline std::map<std::string, LoopedSimpleGraph> gen_fig_graphs() {
  std::map<std::string, LoopedSimpleGraph> out;
  out.emplace("fig1G", gen_Gk(3));

  LoopedSimpleGraph fig1H(3);
  for (int v = 0; v < 3; ++v) {
    fig1H.add_edge(v, (v + 1) % 3);
    fig1H.add_loop(v);
    fig1H.add_loop(v);
  }
  out.emplace("fig1H", fig1H);

  // v0 above a looped 4-cycle v1..v4
  LoopedSimpleGraph fig2G(5);
  fig2G.add_edge(1, 2);
  fig2G.add_edge(2, 3);
  fig2G.add_edge(3, 4);
  fig2G.add_edge(4, 1);
  fig2G.add_edge(0, 1);
  fig2G.add_edge(0, 2);
  for (int v = 1; v <= 4; ++v) fig2G.add_loop(v);
  out.emplace("fig2G", fig2G);

  LoopedSimpleGraph fig2H(5);
  fig2H.add_edge(1, 2);
  fig2H.add_edge(2, 3);
  fig2H.add_edge(3, 4);
  fig2H.add_edge(4, 1);
  fig2H.add_edge(0, 2);
  for (int v = 2; v <= 4; ++v) fig2H.add_loop(v);
  out.emplace("fig2H", fig2H);

  LoopedSimpleGraph fig2K = fig2H;
  fig2K.add_edge(0, 1);
  out.emplace("fig2K", fig2K);
  return out;
}

/// Disjoint union, with b's vertices shifted past a's.
inline LoopedSimpleGraph disjoint_union(const LoopedSimpleGraph& a,
                                        const LoopedSimpleGraph& b) {
  LoopedSimpleGraph g(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Loop& l : a.loops()) g.add_loop(l.v);
  const int off = a.vertex_count();
  for (const Edge& e : b.edges()) g.add_edge(e.u + off, e.v + off);
  for (const Loop& l : b.loops()) g.add_loop(l.v + off);
  return g;
}

/// Rejection-samples a weakly k-balanced looped simple graph on n
/// vertices, or nullopt after the attempt budget. Low-degree vertices
/// (the cut-prone ones) are biased toward extra loops, and the loop
/// supply ramps up as attempts fail. Deterministic per seed.
inline std::optional<LoopedSimpleGraph> sample_weakly_balanced(
    int n, int k, double density, std::uint64_t seed,
    int max_attempts = 10'000) {
  if (n < 1) throw PreconditionViolated("n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    LoopedSimpleGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < density) g.add_edge(u, v);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    int ramp = attempt / 50;
    for (int v = 0; v < n; ++v) {
      int bias = (g.degree(v) < max_deg) ? 1 : 0;
      int cap = 1 + (k + 1) / 2 + bias + ramp;
      std::uniform_int_distribution<int> dist(0, cap);
      int nloops = dist(rng);
      for (int i = 0; i < nloops; ++i) g.add_loop(v);
    }
    if (is_weakly_k_balanced(g, k).holds) return g;
  }
  return std::nullopt;
}

}  // namespace lcf
