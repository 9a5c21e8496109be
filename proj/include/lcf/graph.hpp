#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lcf/errors.hpp"

namespace lcf {

using VertexId = int;

/// A simple edge, stored with endpoints normalized so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A loop at a vertex. `ord` distinguishes parallel loops at the same
/// vertex; loops are individual matroid elements, not a count.
struct Loop {
  VertexId v = 0;
  int ord = 0;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

/// One element of the ground set E ∪ L.
struct Element {
  bool is_loop = false;
  VertexId u = 0;
  VertexId v = 0;  // for a loop, u == v
  int ord = 0;     // loop ordinal; 0 for edges
  friend auto operator<=>(const Element&, const Element&) = default;

  static Element edge(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return Element{false, a, b, 0};
  }
  static Element loop(Loop l) { return Element{true, l.v, l.v, l.ord}; }
};

/// A looped simple graph G = (V, E, L): no parallel simple edges, any
/// number of labeled loops per vertex. Vertices are dense ids [0, n).
///
/// Mutating members are intended for construction; the module-level
/// operations below are pure and return fresh graphs, so built graphs
/// can be shared read-only.
class LoopedSimpleGraph {
 public:
  LoopedSimpleGraph() = default;
  explicit LoopedSimpleGraph(int n) : n_(n), adj_(n), loop_count_(n, 0) {
    if (n < 0) throw PreconditionViolated("vertex count must be >= 0");
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Loop>& loops() const { return loops_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int loop_count() const { return static_cast<int>(loops_.size()); }
  int element_count() const { return edge_count() + loop_count(); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

  bool has_edge(VertexId a, VertexId b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
    const auto& na = adj_[a];
    return std::find(na.begin(), na.end(), b) != na.end();
  }

  /// Number of loops at v (l_G(v)).
  int loops_at(VertexId v) const {
    check_vertex(v);
    return loop_count_[v];
  }

  /// Simple-edge degree; loops not counted.
  int degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> out = adj_[v];
    std::sort(out.begin(), out.end());
    return out;
  }

  void add_edge(VertexId a, VertexId b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b)
      throw PreconditionViolated("a loop must be added with add_loop");
    if (has_edge(a, b))
      throw PreconditionViolated("duplicate simple edge " + std::to_string(a) +
                                 "-" + std::to_string(b));
    if (a > b) std::swap(a, b);
    edges_.push_back(Edge{a, b});
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  /// Adds a fresh loop at v and returns its id. Ordinals stay stable
  /// under deletion: the new ordinal is one past the largest in use.
  Loop add_loop(VertexId v) {
    check_vertex(v);
    int ord = 0;
    for (const Loop& l : loops_)
      if (l.v == v) ord = std::max(ord, l.ord + 1);
    loops_.push_back(Loop{v, ord});
    ++loop_count_[v];
    return loops_.back();
  }

  bool has_loop(Loop l) const {
    return std::find(loops_.begin(), loops_.end(), l) != loops_.end();
  }

  void remove_edge(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    auto it = std::find(edges_.begin(), edges_.end(), Edge{a, b});
    if (it == edges_.end())
      throw UnknownElement("no edge " + std::to_string(a) + "-" +
                           std::to_string(b));
    edges_.erase(it);
    adj_[a].erase(std::find(adj_[a].begin(), adj_[a].end(), b));
    adj_[b].erase(std::find(adj_[b].begin(), adj_[b].end(), a));
  }

  /// Removes exactly the loop (v, ord); other loops keep their ordinals.
  void remove_loop(Loop l) {
    auto it = std::find(loops_.begin(), loops_.end(), l);
    if (it == loops_.end())
      throw UnknownElement("no loop (" + std::to_string(l.v) + "," +
                           std::to_string(l.ord) + ")");
    loops_.erase(it);
    --loop_count_[l.v];
  }

  /// Ground set in a fixed order: edges in storage order, then loops.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(edges_.size() + loops_.size());
    for (const Edge& e : edges_) out.push_back(Element::edge(e.u, e.v));
    for (const Loop& l : loops_) out.push_back(Element::loop(l));
    return out;
  }

  /// Content equality: same vertex count, same edge set, same loop
  /// multiset per vertex. Loop ordinals are bookkeeping, not content.
  friend bool operator==(const LoopedSimpleGraph& a,
                         const LoopedSimpleGraph& b) {
    if (a.n_ != b.n_) return false;
    auto ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    if (ea != eb) return false;
    return a.loop_count_ == b.loop_count_;
  }

 private:
  void check_vertex(VertexId v) const {
    if (!has_vertex(v))
      throw PreconditionViolated("vertex " + std::to_string(v) +
                                 " out of range [0," + std::to_string(n_) +
                                 ")");
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Loop> loops_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<int> loop_count_;
};

/// G^{[t]}: t fresh loops at every vertex; edges unchanged.
inline LoopedSimpleGraph add_uniform_loops(const LoopedSimpleGraph& g, int t) {
  if (t < 0) throw PreconditionViolated("t must be >= 0");
  LoopedSimpleGraph out = g;
  for (int round = 0; round < t; ++round)
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_loop(v);
  return out;
}

/// G - F for an element set F. Vertex set unchanged; surviving loops
/// keep their ordinals.
inline LoopedSimpleGraph delete_elements(const LoopedSimpleGraph& g,
                                         const std::vector<Element>& f_set) {
  LoopedSimpleGraph out = g;
  for (const Element& f : f_set) {
    if (f.is_loop)
      out.remove_loop(Loop{f.v, f.ord});
    else
      out.remove_edge(f.u, f.v);
  }
  return out;
}

/// G - T for a vertex set T: fresh graph plus the old->new index map
/// (-1 for deleted vertices).
struct VertexDeletionResult {
  LoopedSimpleGraph graph;
  std::vector<int> old_to_new;
};

inline VertexDeletionResult delete_vertices(const LoopedSimpleGraph& g,
                                            const std::vector<VertexId>& T) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (VertexId v : T) {
    if (!g.has_vertex(v))
      throw PreconditionViolated("vertex " + std::to_string(v) +
                                 " out of range");
    drop[v] = 1;
  }
  std::vector<int> old_to_new(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) old_to_new[v] = next++;
  LoopedSimpleGraph out(next);
  for (const Edge& e : g.edges())
    if (!drop[e.u] && !drop[e.v]) out.add_edge(old_to_new[e.u], old_to_new[e.v]);
  for (const Loop& l : g.loops())
    if (!drop[l.v]) out.add_loop(old_to_new[l.v]);
  return {std::move(out), std::move(old_to_new)};
}

/// Connected components under simple edges only (loops ignored), with
/// vertices in `removed` treated as absent. Components and their
/// members come out sorted, so the result is deterministic.
inline std::vector<std::vector<VertexId>> components_excluding(
    const LoopedSimpleGraph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s] || (s < static_cast<int>(removed.size()) && removed[s]))
      continue;
    std::vector<VertexId> comp;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (seen[w] || (w < static_cast<int>(removed.size()) && removed[w]))
          continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::vector<std::vector<VertexId>> components(
    const LoopedSimpleGraph& g) {
  return components_excluding(g, {});
}

/// Induced subgraph on X: the edges E_G(X) and loops L_G(X), with X's
/// vertices relabeled 0..|X|-1 in increasing order.
inline LoopedSimpleGraph induced_subgraph(const LoopedSimpleGraph& g,
                                          std::vector<VertexId> X) {
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  std::vector<int> old_to_new(g.vertex_count(), -1);
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (!g.has_vertex(X[i]))
      throw PreconditionViolated("vertex " + std::to_string(X[i]) +
                                 " out of range");
    old_to_new[X[i]] = static_cast<int>(i);
  }
  LoopedSimpleGraph out(static_cast<int>(X.size()));
  for (const Edge& e : g.edges())
    if (old_to_new[e.u] >= 0 && old_to_new[e.v] >= 0)
      out.add_edge(old_to_new[e.u], old_to_new[e.v]);
  for (const Loop& l : g.loops())
    if (old_to_new[l.v] >= 0) out.add_loop(old_to_new[l.v]);
  return out;
}

}  // namespace lcf
