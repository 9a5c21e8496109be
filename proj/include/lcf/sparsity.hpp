#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lcf/graph.hpp"

namespace lcf {

struct SparsityCertificate {
  bool sparse = false;
  // On violation, a vertex set X with |E(X)| + |L(X)| > t|X|.
  std::optional<std::vector<VertexId>> violating_set;
};

/// The (k,0)-pebble game. Every vertex starts with k pebbles; inserting
/// an element consumes one pebble from an endpoint after pulling
/// pebbles along reversed paths. Loops are self-edges paying one pebble
/// at their vertex. A set of elements is (k,0)-sparse iff all its
/// insertions succeed.
class PebbleGame {
 public:
  PebbleGame(int n, int k) : k_(k), pebbles_(n, k), out_(n) {}

  bool try_insert(VertexId u, VertexId v) {
    if (acquire(u)) {
      --pebbles_[u];
      out_[u].push_back(v);
      return true;
    }
    if (u != v && acquire(v)) {
      --pebbles_[v];
      out_[v].push_back(u);
      return true;
    }
    return false;
  }

  /// Vertices reachable from {u, v} along the current orientation;
  /// after a failed insert this region carries no pebbles and is the
  /// violating-set witness.
  std::vector<VertexId> reach(VertexId u, VertexId v) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<VertexId> stack{u};
    seen[u] = 1;
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
    std::vector<VertexId> region;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      region.push_back(x);
      for (VertexId y : out_[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(region.begin(), region.end());
    return region;
  }

  struct Snapshot {
    std::vector<int> pebbles;
    std::vector<std::vector<VertexId>> out;
  };
  Snapshot snapshot() const { return {pebbles_, out_}; }
  void restore(Snapshot s) {
    pebbles_ = std::move(s.pebbles);
    out_ = std::move(s.out);
  }

 private:
  // Ensures a pebble sits at root, pulling one along a reversed path
  // if needed. Returns false when no pebble is reachable.
  bool acquire(VertexId root) {
    if (pebbles_[root] > 0) return true;
    std::vector<int> parent(out_.size(), -2);
    std::vector<VertexId> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (pebbles_[x] > 0) {
        // reverse the path root -> ... -> x, shifting the pebble back
        --pebbles_[x];
        ++pebbles_[root];
        VertexId cur = x;
        while (parent[cur] != -1) {
          VertexId p = parent[cur];
          out_[p].erase(std::find(out_[p].begin(), out_[p].end(), cur));
          out_[cur].push_back(p);
          cur = p;
        }
        return true;
      }
      for (VertexId y : out_[x])
        if (parent[y] == -2) {
          parent[y] = x;
          stack.push_back(y);
        }
    }
    return false;
  }

  int k_;
  std::vector<int> pebbles_;
  std::vector<std::vector<VertexId>> out_;
};

inline int induced_element_count(const LoopedSimpleGraph& g,
                                 const std::vector<VertexId>& X) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : X) in[v] = 1;
  int count = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) ++count;
  for (const Loop& l : g.loops())
    if (in[l.v]) ++count;
  return count;
}

/// t-sparsity via the (t,0)-pebble game; the violating set recounts to
/// a genuine violation.
inline SparsityCertificate is_t_sparse(const LoopedSimpleGraph& g, int t) {
  if (t < 1) throw PreconditionViolated("t must be >= 1");
  SparsityCertificate cert;
  PebbleGame game(g.vertex_count(), t);
  for (const Element& e : g.elements()) {
    if (!game.try_insert(e.u, e.v)) {
      cert.sparse = false;
      cert.violating_set = game.reach(e.u, e.v);
      return cert;
    }
  }
  cert.sparse = true;
  return cert;
}

inline bool is_t_tight(const LoopedSimpleGraph& g, int t) {
  return g.element_count() == t * g.vertex_count() && is_t_sparse(g, t).sparse;
}

/// Walecki-style decomposition of E(K_n): for odd n, (n-1)/2 Hamilton
/// cycles; for even n, n/2 - 1 Hamilton cycles plus a perfect matching.
struct HamiltonDecomposition {
  std::vector<std::vector<Edge>> cycles;
  std::optional<std::vector<Edge>> matching;  // present iff n is even
};

inline HamiltonDecomposition hamilton_decomposition(int n) {
  if (n < 3) throw PreconditionViolated("need n >= 3");
  HamiltonDecomposition out;
  auto mk = [](VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  };
  if (n % 2 == 1) {
    // rotate a zigzag Hamilton cycle on Z_{n-1} + one hub vertex
    const int m = (n - 1) / 2;
    const int ring = n - 1;
    const VertexId hub = n - 1;
    std::vector<VertexId> seq{0};
    for (int k = 1; k < m; ++k) {
      seq.push_back(k);
      seq.push_back(ring - k);
    }
    seq.push_back(m);
    for (int i = 0; i < m; ++i) {
      std::vector<Edge> cycle;
      VertexId prev = hub;
      for (VertexId x : seq) {
        VertexId cur = (x + i) % ring;
        cycle.push_back(mk(prev, cur));
        prev = cur;
      }
      cycle.push_back(mk(prev, hub));
      out.cycles.push_back(std::move(cycle));
    }
  } else {
    // round-robin 1-factorization; consecutive factors pair into
    // Hamilton cycles, the last factor is the leftover matching
    const int m = n / 2;
    const int ring = n - 1;
    const VertexId hub = n - 1;
    auto factor = [&](int j) {
      std::vector<Edge> f{mk(hub, j)};
      for (int a = 1; a < m; ++a)
        f.push_back(mk(((j - a) % ring + ring) % ring, (j + a) % ring));
      return f;
    };
    for (int r = 0; r + 1 < ring; r += 2) {
      std::vector<Edge> cycle = factor(r);
      std::vector<Edge> second = factor(r + 1);
      cycle.insert(cycle.end(), second.begin(), second.end());
      out.cycles.push_back(std::move(cycle));
    }
    out.matching = factor(ring - 1);
  }
  return out;
}

/// The t-tight witness on a 2t-vertex looped set S: the t-1 Hamilton
/// cycles of K_{2t} (the matching is not needed) plus one loop per
/// vertex, giving exactly t|S| elements. Output vertex i stands for
/// S[i].
inline LoopedSimpleGraph build_t_tight_witness(const std::vector<VertexId>& S,
                                               int t) {
  if (t < 1) throw PreconditionViolated("t must be >= 1");
  if (static_cast<int>(S.size()) != 2 * t)
    throw PreconditionViolated("witness set must have exactly 2t vertices");
  {
    auto sorted = S;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionViolated("witness set has repeated vertices");
  }
  LoopedSimpleGraph w(2 * t);
  if (t >= 2)
    for (const auto& cycle : hamilton_decomposition(2 * t).cycles)
      for (const Edge& e : cycle) w.add_edge(e.u, e.v);
  for (VertexId v = 0; v < 2 * t; ++v) w.add_loop(v);
  return w;
}

namespace detail {

// Clique of `size` among the candidate vertices; candidates are picked
// in increasing order so each clique is visited once.
inline bool clique_search(const std::vector<std::uint64_t>& adj,
                          std::uint64_t cand, int size) {
  if (size <= 0) return true;
  if (__builtin_popcountll(cand) < size) return false;
  while (cand) {
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    if (clique_search(adj, cand & adj[v], size - 1)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff the simple edges of g contain a K_size.
inline bool contains_clique(const LoopedSimpleGraph& g, int size) {
  const int n = g.vertex_count();
  if (size <= 0) return true;
  if (size == 1) return n >= 1;
  if (n > 64) throw PreconditionViolated("clique check limited to 64 vertices");
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1ULL << e.v;
    adj[e.v] |= 1ULL << e.u;
  }
  std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  return detail::clique_search(adj, all, size);
}

/// Exhaustive search for a spanning d-tight, K_{d+2}-free subgraph in
/// which every vertex keeps at least floor(d/2) loops. The hypothesis
/// that g itself offers floor(d/2) loops per vertex is required for
/// presence/absence to characterize L_d-rigidity.
inline std::optional<LoopedSimpleGraph> find_spanning_d_tight_Kd2_free(
    const LoopedSimpleGraph& g, int d, std::uint64_t budget = 20'000'000) {
  if (d < 1) throw PreconditionViolated("dimension must be >= 1");
  const int n = g.vertex_count();
  const int need_loops = d / 2;
  for (VertexId v = 0; v < n; ++v)
    if (g.loops_at(v) < need_loops)
      throw HypothesisViolated("vertex " + std::to_string(v) +
                               " carries fewer than floor(d/2) loops");
  if (n > 64) throw PreconditionViolated("search limited to 64 vertices");
  const int target = d * n;
  const std::vector<Element> elems = g.elements();
  const int m = static_cast<int>(elems.size());
  if (m < target) return std::nullopt;

  // loops of g still available at index >= i, per vertex
  std::vector<std::vector<int>> loops_from(m + 1, std::vector<int>(n, 0));
  for (int i = m - 1; i >= 0; --i) {
    loops_from[i] = loops_from[i + 1];
    if (elems[i].is_loop) ++loops_from[i][elems[i].v];
  }

  PebbleGame game(n, d);
  std::vector<std::uint64_t> adj(n, 0);
  std::vector<int> chosen_loops(n, 0);
  std::vector<Element> chosen;
  std::uint64_t nodes = 0;
  std::optional<LoopedSimpleGraph> found;

  auto completes_clique = [&](VertexId u, VertexId v) {
    // adding uv finishes a K_{d+2} iff the common neighbourhood holds a
    // d-clique
    return detail::clique_search(adj, adj[u] & adj[v], d);
  };

  auto quotas_feasible = [&](int next_index) {
    for (VertexId v = 0; v < n; ++v)
      if (chosen_loops[v] + loops_from[next_index][v] < need_loops) return false;
    return true;
  };

  std::function<bool(int)> search = [&](int i) -> bool {
    if (++nodes > budget)
      throw BudgetExceeded("d-tight subgraph search exceeded node budget");
    int c = static_cast<int>(chosen.size());
    if (c == target) {
      for (VertexId v = 0; v < n; ++v)
        if (chosen_loops[v] < need_loops) return false;
      LoopedSimpleGraph h(n);
      for (const Element& e : chosen) {
        if (e.is_loop)
          h.add_loop(e.v);
        else
          h.add_edge(e.u, e.v);
      }
      found = std::move(h);
      return true;
    }
    if (i == m || c + (m - i) < target) return false;
    const Element& e = elems[i];
    // branch 1: take element i
    bool take_ok = true;
    if (!e.is_loop && (adj[e.u] >> e.v & 1)) take_ok = false;
    if (take_ok && !e.is_loop && completes_clique(e.u, e.v)) take_ok = false;
    if (take_ok) {
      auto snap = game.snapshot();
      if (game.try_insert(e.u, e.v)) {
        chosen.push_back(e);
        if (e.is_loop)
          ++chosen_loops[e.v];
        else {
          adj[e.u] |= 1ULL << e.v;
          adj[e.v] |= 1ULL << e.u;
        }
        if (search(i + 1)) return true;
        chosen.pop_back();
        if (e.is_loop)
          --chosen_loops[e.v];
        else {
          adj[e.u] &= ~(1ULL << e.v);
          adj[e.v] &= ~(1ULL << e.u);
        }
        game.restore(std::move(snap));
      }
    }
    // branch 2: skip element i
    if (!quotas_feasible(i + 1)) return false;
    return search(i + 1);
  };

  search(0);
  return found;
}

}  // namespace lcf
