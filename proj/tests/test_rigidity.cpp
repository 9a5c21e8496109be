#include <gtest/gtest.h>

#include <random>

#include "lcf/balance.hpp"
#include "lcf/constructions.hpp"
#include "lcf/exact_rank.hpp"
#include "lcf/graph.hpp"
#include "lcf/rigidity.hpp"

namespace lcf {
namespace {

LoopedSimpleGraph complete_graph(int n, int loops_per_vertex = 0) {
  LoopedSimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < loops_per_vertex; ++i) g.add_loop(v);
  return g;
}

LoopedSimpleGraph random_looped_graph(std::mt19937_64& rng, int max_n,
                                      int max_loops = 2) {
  int n = 1 + static_cast<int>(rng() % max_n);
  LoopedSimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) g.add_edge(u, v);
  for (int v = 0; v < n; ++v)
    for (std::uint64_t i = 0; i < rng() % (max_loops + 1); ++i) g.add_loop(v);
  return g;
}

TEST(RandomFramework, DeterministicPerSeed) {
  LoopedSimpleGraph g = gen_Gk(4);
  Framework a = random_framework(g, 2, 42);
  Framework b = random_framework(g, 2, 42);
  EXPECT_EQ(a.positions, b.positions);
  EXPECT_EQ(a.normals, b.normals);
  Framework c = random_framework(g, 2, 43);
  EXPECT_NE(a.positions, c.positions);
}

TEST(RandomFramework, NormalsNonzero) {
  LoopedSimpleGraph g(2);
  for (int i = 0; i < 5; ++i) g.add_loop(0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Framework fw = random_framework(g, 3, seed);
    for (int l = 0; l < g.loop_count(); ++l) {
      bool nonzero = false;
      for (int c = 0; c < 3; ++c)
        if (fw.normal(l, c) != 0) nonzero = true;
      EXPECT_TRUE(nonzero);
    }
  }
}

TEST(BuildMatrix, SingleLoopRow) {
  LoopedSimpleGraph g(1);
  g.add_loop(0);
  Framework fw = random_framework(g, 3, 1);
  RigidityMatrix m = build_matrix(fw);
  EXPECT_EQ(m.rows, 1);
  EXPECT_EQ(m.cols, 3);
  for (int c = 0; c < 3; ++c) EXPECT_EQ(m.at(0, c), fw.normal(0, c));
}

TEST(BuildMatrix, SingleEdgeRow) {
  LoopedSimpleGraph g(2);
  g.add_edge(0, 1);
  Framework fw = random_framework(g, 2, 1);
  RigidityMatrix m = build_matrix(fw);
  EXPECT_EQ(m.rows, 1);
  EXPECT_EQ(m.cols, 4);
  for (int c = 0; c < 2; ++c) {
    std::uint64_t diff = sub_mod(fw.position(0, c), fw.position(1, c));
    EXPECT_EQ(m.at(0, c), diff);
    EXPECT_EQ(m.at(0, 2 + c), sub_mod(0, diff));
  }
}

TEST(BuildMatrix, G3ShapeIsSixBySix) {
  RigidityMatrix m = build_matrix(random_framework(gen_Gk(3), 2, 1));
  EXPECT_EQ(m.rows, 6);
  EXPECT_EQ(m.cols, 6);
}

TEST(BuildMatrix, BareVertexGivesEmptyMatrix) {
  LoopedSimpleGraph g(1);
  RigidityMatrix m = build_matrix(random_framework(g, 2, 1));
  EXPECT_EQ(m.rows, 0);
  EXPECT_EQ(m.cols, 2);
}

TEST(GenericRank, EmptyGraphRankZero) {
  LoopedSimpleGraph g(3);
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(generic_rank(g, d).rank, 0);
}

TEST(GenericRank, SingleVertexWithDLoops) {
  for (int d = 1; d <= 4; ++d) {
    LoopedSimpleGraph g(1);
    for (int i = 0; i < d; ++i) g.add_loop(0);
    EXPECT_EQ(generic_rank(g, d).rank, d);
  }
}

TEST(GenericRank, K4InThePlaneHasRankFive) {
  // classical count d|V| - C(d+1,2) = 5; K_4's six edges are dependent
  EXPECT_EQ(generic_rank(complete_graph(4), 2).rank, 5);
}

TEST(GenericRank, H3UpperBound) {
  LoopedSimpleGraph h3 = gen_Ht(3);
  RankReport r = generic_rank(h3, 2, 6);
  EXPECT_LE(r.rank, 21);  // 8t-3 = 2|V|-3 via the thin-cover certificate
  EXPECT_EQ(r.rank, 21);  // and the bound is attained
}

TEST(GenericRank, AgreesWithExactRationalRankOnTinyInstances) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 4);
    int d = 1 + static_cast<int>(rng() % 3);
    int modular = generic_rank(g, d, 3, rng()).rank;
    int exact = 0;
    for (int attempt = 0; attempt < 3; ++attempt)
      exact = std::max(exact, exact_rank(random_integer_framework(g, d, rng())));
    EXPECT_EQ(modular, exact);
  }
}

TEST(GenericRank, SeedInvariance) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 6);
    int d = 1 + static_cast<int>(rng() % 3);
    int r1 = generic_rank(g, d, 3, 1).rank;
    int r2 = generic_rank(g, d, 3, 999).rank;
    int r3 = generic_rank(g, d, 3, 123456789).rank;
    EXPECT_EQ(r1, r2);
    EXPECT_EQ(r1, r3);
  }
}

TEST(GenericRank, NeverExceedsDnAndBarJointBound) {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 40; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 6);
    int d = 1 + static_cast<int>(rng() % 3);
    int rank = generic_rank(g, d).rank;
    EXPECT_LE(rank, d * g.vertex_count());
    EXPECT_LE(rank, g.element_count());
    // bar-joint submatrix: drop the loops
    std::vector<Element> loops;
    for (const Loop& l : g.loops()) loops.push_back(Element::loop(l));
    LoopedSimpleGraph bars = delete_elements(g, loops);
    if (bars.vertex_count() >= d + 1) {
      int bar_rank = generic_rank(bars, d).rank;
      EXPECT_LE(bar_rank, d * bars.vertex_count() - d * (d + 1) / 2);
    }
  }
}

TEST(GenericRank, DeletionMonotoneAndLoopAddsAtMostOne) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 5);
    int d = 1 + static_cast<int>(rng() % 3);
    int rank = generic_rank(g, d).rank;
    for (const Element& f : g.elements()) {
      int sub = generic_rank(delete_elements(g, {f}), d).rank;
      EXPECT_LE(sub, rank);
      EXPECT_GE(sub, rank - 1);
    }
    LoopedSimpleGraph plus = g;
    plus.add_loop(static_cast<VertexId>(rng() % g.vertex_count()));
    int augmented = generic_rank(plus, d).rank;
    EXPECT_GE(augmented, rank);
    EXPECT_LE(augmented, rank + 1);
  }
}

TEST(GenericRank, Weakly1BalancedImpliesL1Rigid) {
  std::mt19937_64 rng(111);
  int hits = 0;
  for (int trial = 0; trial < 300 && hits < 60; ++trial) {
    LoopedSimpleGraph g = random_looped_graph(rng, 6, 1);
    if (!is_weakly_k_balanced(g, 1).holds) continue;
    ++hits;
    EXPECT_TRUE(is_Ld_rigid(g, 1));
  }
  EXPECT_GE(hits, 30);
}

TEST(LdRigid, GkFamilyIsRigidInThePlane) {
  for (int k = 3; k <= 8; ++k) {
    RankReport report;
    EXPECT_TRUE(is_Ld_rigid(gen_Gk(k), 2, &report));
    EXPECT_EQ(report.rank, 2 * k);
  }
}

TEST(LdRigid, HtFamilyIsNotRigid) {
  for (int t = 3; t <= 5; ++t) EXPECT_FALSE(is_Ld_rigid(gen_Ht(t), 2));
}

TEST(LdRigid, SingleVertexWithDLoops) {
  for (int d = 1; d <= 4; ++d) {
    LoopedSimpleGraph g(1);
    for (int i = 0; i < d; ++i) g.add_loop(0);
    EXPECT_TRUE(is_Ld_rigid(g, d));
  }
}

TEST(Redundant, GkIsNotRedundantlyRigid) {
  for (int k = 3; k <= 6; ++k) {
    auto r = is_redundantly_Ld_rigid(gen_Gk(k), 2);
    EXPECT_FALSE(r.redundant);
    ASSERT_TRUE(r.failing_element.has_value());
    // recount: removing the reported element indeed breaks rigidity
    LoopedSimpleGraph h = delete_elements(gen_Gk(k), {*r.failing_element});
    EXPECT_FALSE(is_Ld_rigid(h, 2));
  }
}

TEST(Redundant, SingleVertexThreeLoops) {
  LoopedSimpleGraph g(1);
  for (int i = 0; i < 3; ++i) g.add_loop(0);
  EXPECT_TRUE(is_redundantly_Ld_rigid(g, 2).redundant);
}

TEST(Redundant, K5WithTwoLoopsPerVertex) {
  EXPECT_TRUE(is_redundantly_Ld_rigid(complete_graph(5, 2), 2).redundant);
}

TEST(Global2, SingleVertexTwoLoops) {
  LoopedSimpleGraph g(1);
  g.add_loop(0);
  g.add_loop(0);
  EXPECT_TRUE(is_globally_L2_rigid_char(g).globally_rigid);
  // but with one loop only it fails
  LoopedSimpleGraph h(1);
  h.add_loop(0);
  EXPECT_FALSE(is_globally_L2_rigid_char(h).globally_rigid);
}

TEST(Global2, GkFailsConditionI) {
  auto diag = is_globally_L2_rigid_char(gen_Gk(5));
  EXPECT_FALSE(diag.globally_rigid);
  ASSERT_EQ(diag.component_ok.size(), 1u);
  EXPECT_FALSE(diag.component_ok[0]);
  EXPECT_FALSE(diag.failing_pair.has_value());  // condition (ii) holds
}

TEST(Global2, WeaklySixBalancedSamplesAreGloballyRigid) {
  std::mt19937_64 rng(222);
  int found = 0;
  for (int trial = 0; trial < 40 && found < 6; ++trial) {
    auto g = sample_weakly_balanced(4 + static_cast<int>(rng() % 3), 6, 0.7,
                                    rng());
    if (!g) continue;
    ++found;
    EXPECT_TRUE(is_globally_L2_rigid_char(*g).globally_rigid);
  }
  EXPECT_GE(found, 3);
}

TEST(DefaultTrials, EnvOverride) {
  unsetenv("LCF_TRIALS");
  EXPECT_EQ(default_trials(), 3);
  setenv("LCF_TRIALS", "5", 1);
  EXPECT_EQ(default_trials(), 5);
  setenv("LCF_TRIALS", "bogus", 1);
  EXPECT_EQ(default_trials(), 3);
  unsetenv("LCF_TRIALS");
}

TEST(RankReportFields, OracleMetadata) {
  RankReport r = generic_rank(gen_Gk(3), 2, 5, 9);
  EXPECT_EQ(r.trials, 5);
  EXPECT_EQ(r.modulus_bits, 62);
  EXPECT_EQ(r.method, RankMethod::kMatrixOracle);
  EXPECT_FALSE(r.certificate.has_value());
  EXPECT_THROW(generic_rank(gen_Gk(3), 2, 0), PreconditionViolated);
}

}  // namespace
}  // namespace lcf
