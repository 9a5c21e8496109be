#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcf/graph.hpp"

namespace lcf {

// The three balancedness predicates, decided by exhaustive enumeration
// of cut sets T in increasing |T| (lexicographic within a size), with
// the first violation returned as a witness. The quantifiers are
// implemented exactly as defined:
//
//   k-balanced:        T ⊆ V, |T| ≤ k; every component of G-T has at
//                      least k-|T| vertices that carry a loop.
//   weakly k-balanced: same, with loops counted with multiplicity.
//   essentially k-balanced: |V| ≥ k+1; T ⊊ V, |T| < k; every component
//                      of G-T containing a simple edge contains a loop.

struct BalancednessVerdict {
  bool holds = false;
  std::optional<std::vector<VertexId>> witness_cut;
  std::optional<std::vector<VertexId>> witness_component;
  // loops (or looped vertices) found in the witness component, minus
  // the number required; negative exactly when the predicate fails
  std::optional<int> deficiency;
};

constexpr std::uint64_t kDefaultBalanceBudget = 10'000'000;

namespace detail {

// Visits all T ⊆ V with |T| in [0, max_size], size-major then
// lexicographic. `visit` returns true to stop (violation found).
template <typename Visit>
bool for_each_cut(int n, int max_size, Visit&& visit) {
  std::vector<VertexId> T;
  for (int size = 0; size <= std::min(max_size, n); ++size) {
    T.assign(size, 0);
    for (int i = 0; i < size; ++i) T[i] = i;
    while (true) {
      if (visit(T)) return true;
      if (size == 0) break;
      // next combination
      int i = size - 1;
      while (i >= 0 && T[i] == n - size + i) --i;
      if (i < 0) break;
      ++T[i];
      for (int j = i + 1; j < size; ++j) T[j] = T[j - 1] + 1;
    }
  }
  return false;
}

template <typename CheckComponent>
BalancednessVerdict balance_scan(const LoopedSimpleGraph& g, int max_cut,
                                 std::uint64_t budget,
                                 CheckComponent&& check) {
  BalancednessVerdict verdict;
  verdict.holds = true;
  std::uint64_t used = 0;
  std::vector<char> removed(g.vertex_count(), 0);
  for_each_cut(g.vertex_count(), max_cut, [&](const std::vector<VertexId>& T) {
    std::fill(removed.begin(), removed.end(), 0);
    for (VertexId v : T) removed[v] = 1;
    for (const auto& comp : components_excluding(g, removed)) {
      if (++used > budget)
        throw BudgetExceeded("balancedness enumeration exceeded " +
                             std::to_string(budget) + " checks");
      std::optional<int> deficiency = check(T, comp);
      if (deficiency) {
        verdict.holds = false;
        verdict.witness_cut = T;
        verdict.witness_component = comp;
        verdict.deficiency = deficiency;
        return true;
      }
    }
    return false;
  });
  return verdict;
}

}  // namespace detail

inline BalancednessVerdict is_k_balanced(
    const LoopedSimpleGraph& g, int k,
    std::uint64_t budget = kDefaultBalanceBudget) {
  if (k < 0) throw PreconditionViolated("k must be >= 0");
  return detail::balance_scan(
      g, k, budget,
      [&](const std::vector<VertexId>& T,
          const std::vector<VertexId>& comp) -> std::optional<int> {
        int required = k - static_cast<int>(T.size());
        int looped = 0;
        for (VertexId v : comp)
          if (g.loops_at(v) > 0) ++looped;
        if (looped < required) return looped - required;
        return std::nullopt;
      });
}

inline BalancednessVerdict is_weakly_k_balanced(
    const LoopedSimpleGraph& g, int k,
    std::uint64_t budget = kDefaultBalanceBudget) {
  if (k < 0) throw PreconditionViolated("k must be >= 0");
  return detail::balance_scan(
      g, k, budget,
      [&](const std::vector<VertexId>& T,
          const std::vector<VertexId>& comp) -> std::optional<int> {
        int required = k - static_cast<int>(T.size());
        int loops = 0;
        for (VertexId v : comp) loops += g.loops_at(v);
        if (loops < required) return loops - required;
        return std::nullopt;
      });
}

inline BalancednessVerdict is_essentially_k_balanced(
    const LoopedSimpleGraph& g, int k,
    std::uint64_t budget = kDefaultBalanceBudget) {
  if (k < 0) throw PreconditionViolated("k must be >= 0");
  if (g.vertex_count() < k + 1) {
    BalancednessVerdict verdict;
    verdict.holds = false;
    verdict.witness_cut = std::vector<VertexId>{};
    verdict.witness_component = std::vector<VertexId>{};
    verdict.deficiency = g.vertex_count() - (k + 1);
    return verdict;
  }
  // |T| < k and T ⊊ V; T ⊊ V is automatic since |T| ≤ k-1 < |V|.
  return detail::balance_scan(
      g, k - 1, budget,
      [&](const std::vector<VertexId>&,
          const std::vector<VertexId>& comp) -> std::optional<int> {
        bool has_edge = false;
        for (std::size_t i = 0; i < comp.size() && !has_edge; ++i)
          for (std::size_t j = i + 1; j < comp.size() && !has_edge; ++j)
            if (g.has_edge(comp[i], comp[j])) has_edge = true;
        if (!has_edge) return std::nullopt;
        int loops = 0;
        for (VertexId v : comp) loops += g.loops_at(v);
        if (loops < 1) return loops - 1;
        return std::nullopt;
      });
}

}  // namespace lcf
