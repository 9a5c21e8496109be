#include <gtest/gtest.h>

#include <random>

#include "lcf/balance.hpp"
#include "lcf/constructions.hpp"
#include "lcf/graph.hpp"

namespace lcf {
namespace {

// Independent recount of a returned witness: removing the cut must
// leave the claimed component with the claimed shortfall.
void expect_witness_recounts(const LoopedSimpleGraph& g,
                             const BalancednessVerdict& v, int k,
                             const char* kind) {
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness_cut.has_value());
  ASSERT_TRUE(v.witness_component.has_value());
  ASSERT_TRUE(v.deficiency.has_value());
  std::vector<char> removed(g.vertex_count(), 0);
  for (VertexId x : *v.witness_cut) removed[x] = 1;
  bool found = false;
  for (const auto& comp : components_excluding(g, removed))
    if (comp == *v.witness_component) found = true;
  ASSERT_TRUE(found) << "witness component is not a component of g - T";
  int loops = 0, looped_vertices = 0, edges = 0;
  for (VertexId v0 : *v.witness_component) {
    loops += g.loops_at(v0);
    if (g.loops_at(v0) > 0) ++looped_vertices;
  }
  for (std::size_t i = 0; i < v.witness_component->size(); ++i)
    for (std::size_t j = i + 1; j < v.witness_component->size(); ++j)
      if (g.has_edge((*v.witness_component)[i], (*v.witness_component)[j]))
        ++edges;
  int cut = static_cast<int>(v.witness_cut->size());
  if (std::string(kind) == "k") {
    EXPECT_LT(looped_vertices, k - cut);
    EXPECT_EQ(*v.deficiency, looped_vertices - (k - cut));
  } else if (std::string(kind) == "weak") {
    EXPECT_LT(loops, k - cut);
    EXPECT_EQ(*v.deficiency, loops - (k - cut));
  } else {
    EXPECT_GT(edges, 0);
    EXPECT_EQ(loops, 0);
  }
}

TEST(KBalanced, Fig1VerdictTable) {
  auto figs = gen_fig_graphs();
  const LoopedSimpleGraph& G = figs.at("fig1G");
  const LoopedSimpleGraph& H = figs.at("fig1H");
  // both are 3-balanced, neither is 4-balanced
  EXPECT_TRUE(is_k_balanced(G, 3).holds);
  EXPECT_TRUE(is_k_balanced(H, 3).holds);
  expect_witness_recounts(G, is_k_balanced(G, 4), 4, "k");
  expect_witness_recounts(H, is_k_balanced(H, 4), 4, "k");
  // the disjoint union is 3-balanced too
  EXPECT_TRUE(is_k_balanced(disjoint_union(G, H), 3).holds);
}

TEST(KBalanced, SingleLoopedVertex) {
  LoopedSimpleGraph g(1);
  g.add_loop(0);
  EXPECT_TRUE(is_k_balanced(g, 1).holds);
}

TEST(WeaklyKBalanced, Fig1VerdictTable) {
  auto figs = gen_fig_graphs();
  const LoopedSimpleGraph& G = figs.at("fig1G");
  const LoopedSimpleGraph& H = figs.at("fig1H");
  EXPECT_TRUE(is_weakly_k_balanced(G, 3).holds);
  EXPECT_TRUE(is_weakly_k_balanced(H, 3).holds);
  EXPECT_TRUE(is_weakly_k_balanced(H, 4).holds);
  expect_witness_recounts(G, is_weakly_k_balanced(G, 4), 4, "weak");
  EXPECT_TRUE(is_weakly_k_balanced(disjoint_union(G, H), 3).holds);
}

TEST(EssentiallyKBalanced, Fig2VerdictTable) {
  auto figs = gen_fig_graphs();
  const LoopedSimpleGraph& G = figs.at("fig2G");
  const LoopedSimpleGraph& H = figs.at("fig2H");
  const LoopedSimpleGraph& K = figs.at("fig2K");
  EXPECT_TRUE(is_k_balanced(G, 2).holds);
  EXPECT_FALSE(is_k_balanced(G, 3).holds);
  EXPECT_TRUE(is_essentially_k_balanced(G, 4).holds);
  EXPECT_TRUE(is_k_balanced(H, 1).holds);
  EXPECT_FALSE(is_k_balanced(H, 2).holds);
  EXPECT_TRUE(is_essentially_k_balanced(H, 4).holds);
  BalancednessVerdict kv = is_essentially_k_balanced(K, 3);
  expect_witness_recounts(K, kv, 3, "essential");
  EXPECT_EQ(*kv.witness_cut, (std::vector<VertexId>{2, 4}));
  EXPECT_EQ(*kv.witness_component, (std::vector<VertexId>{0, 1}));
}

TEST(EssentiallyKBalanced, EdgelessGraphHolds) {
  LoopedSimpleGraph g(5);
  g.add_loop(1);
  EXPECT_TRUE(is_essentially_k_balanced(g, 4).holds);
}

TEST(EssentiallyKBalanced, TooFewVerticesFails) {
  LoopedSimpleGraph g = gen_Gk(3);
  EXPECT_FALSE(is_essentially_k_balanced(g, 3).holds);
  EXPECT_TRUE(is_essentially_k_balanced(g, 2).holds);
}

LoopedSimpleGraph random_looped_graph(std::mt19937_64& rng, int max_n) {
  int n = 1 + static_cast<int>(rng() % max_n);
  LoopedSimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 3 != 0) g.add_edge(u, v);
  for (int v = 0; v < n; ++v)
    for (std::uint64_t i = 0; i < rng() % 3; ++i) g.add_loop(v);
  return g;
}

TEST(BalanceProperties, KBalancedImpliesWeaklyKBalanced) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 6);
    int k = static_cast<int>(rng() % 5);
    if (is_k_balanced(g, k).holds) {
      EXPECT_TRUE(is_weakly_k_balanced(g, k).holds);
    }
  }
}

TEST(BalanceProperties, MonotoneDownwardInK) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 6);
    for (int k = 4; k >= 1; --k) {
      if (is_k_balanced(g, k).holds) {
        EXPECT_TRUE(is_k_balanced(g, k - 1).holds);
      }
      if (is_weakly_k_balanced(g, k).holds) {
        EXPECT_TRUE(is_weakly_k_balanced(g, k - 1).holds);
      }
      if (g.vertex_count() >= k + 1 && is_essentially_k_balanced(g, k).holds) {
        EXPECT_TRUE(is_essentially_k_balanced(g, k - 1).holds);
      }
    }
  }
}

TEST(BalanceProperties, EdgeTouchingLoopMakesTriviallyEssential) {
  // if every simple edge is incident to a looped vertex, the graph is
  // essentially (|V|-1)-balanced
  std::mt19937_64 rng(107);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 6);
    bool all_touch = true;
    for (const Edge& e : g.edges())
      if (g.loops_at(e.u) == 0 && g.loops_at(e.v) == 0) all_touch = false;
    if (!all_touch || g.vertex_count() < 2) continue;
    ++checked;
    EXPECT_TRUE(is_essentially_k_balanced(g, g.vertex_count() - 1).holds);
  }
  EXPECT_GE(checked, 20);
}

TEST(BalanceProperties, WitnessesAlwaysRecount) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 6);
    int k = static_cast<int>(rng() % 5);
    auto v1 = is_k_balanced(g, k);
    if (!v1.holds) expect_witness_recounts(g, v1, k, "k");
    auto v2 = is_weakly_k_balanced(g, k);
    if (!v2.holds) expect_witness_recounts(g, v2, k, "weak");
    if (g.vertex_count() >= k + 1) {
      auto v3 = is_essentially_k_balanced(g, k);
      if (!v3.holds) expect_witness_recounts(g, v3, k, "essential");
    }
  }
}

TEST(BalanceBudget, TinyBudgetThrows) {
  LoopedSimpleGraph g = gen_Ht(3);
  EXPECT_THROW(is_k_balanced(g, 3, 2), BudgetExceeded);
  EXPECT_THROW(is_weakly_k_balanced(g, 3, 2), BudgetExceeded);
  EXPECT_THROW(is_essentially_k_balanced(g, 3, 2), BudgetExceeded);
}

}  // namespace
}  // namespace lcf
