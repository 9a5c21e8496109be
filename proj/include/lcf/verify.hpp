#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lcf/balance.hpp"
#include "lcf/constructions.hpp"
#include "lcf/enumerate.hpp"
#include "lcf/graph.hpp"
#include "lcf/matroid_rank.hpp"
#include "lcf/rigidity.hpp"

namespace lcf {

// Theorem-as-test harness. The balancedness theorems are proven, so a
// counterexample on a hypothesis-satisfying instance always means an
// implementation bug; every run is reproducible from (theorem, seed,
// budgets).

struct CounterexampleBundle {
  LoopedSimpleGraph graph;
  std::vector<Element> f_set;
  int d = 0;
  int t = 0;
  std::string note;
};

struct VerificationRun {
  std::string theorem;
  std::uint64_t seed = 0;
  int requested_samples = 0;
  int instances_checked = 0;  // hypothesis-satisfying instances examined
  long long conclusion_checks = 0;
  int sampler_attempts = 0;
  bool budget_exhausted = false;  // sampler ran dry before `samples` instances
  std::vector<CounterexampleBundle> counterexamples;
  double wall_seconds = 0.0;

  bool all_pass() const { return counterexamples.empty(); }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// All element subsets of size <= max_size when there are at most `cap`
// of them, otherwise `cap` random ones (empty set always included).
inline std::vector<std::vector<Element>> f_sets(const LoopedSimpleGraph& g,
                                                int max_size, int cap,
                                                std::mt19937_64& rng) {
  const std::vector<Element> elems = g.elements();
  const int m = static_cast<int>(elems.size());
  std::uint64_t count = 0;
  std::uint64_t binom = 1;
  for (int s = 0; s <= std::min(max_size, m); ++s) {
    count += binom;
    binom = binom * (m - s) / (s + 1);
    if (count > static_cast<std::uint64_t>(cap)) break;
  }
  std::vector<std::vector<Element>> out;
  if (count <= static_cast<std::uint64_t>(cap)) {
    std::vector<int> sel;
    std::function<void(int)> rec = [&](int start) {
      std::vector<Element> f;
      for (int i : sel) f.push_back(elems[i]);
      out.push_back(std::move(f));
      if (static_cast<int>(sel.size()) == max_size) return;
      for (int i = start; i < m; ++i) {
        sel.push_back(i);
        rec(i + 1);
        sel.pop_back();
      }
    };
    rec(0);
    return out;
  }
  out.push_back({});
  std::uniform_int_distribution<int> size_dist(1, max_size);
  for (int draw = 1; draw < cap; ++draw) {
    int size = std::min(size_dist(rng), m);
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < size; ++i) {
      std::uniform_int_distribution<int> pick(i, m - 1);
      std::swap(idx[i], idx[pick(rng)]);
    }
    std::vector<Element> f;
    for (int i = 0; i < size; ++i) f.push_back(elems[idx[i]]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

/// Does one instance satisfy the conclusion of the d >= 2 rigidity
/// theorem: G^{[d-t]} - F is L_d-rigid?
inline bool check_thm_d_geq2_instance(const LoopedSimpleGraph& g,
                                      const std::vector<Element>& F, int d,
                                      int t) {
  LoopedSimpleGraph aug = add_uniform_loops(g, d - t);
  return is_Ld_rigid(delete_elements(aug, F), d);
}

/// Theorem: for d >= 2, d >= 2t-1, every weakly 2t-balanced G and every
/// F with |F| <= t has G^{[d-t]} - F L_d-rigid. Samples
/// hypothesis-satisfying instances and asserts the conclusion.
/// `injected` instances bypass the hypothesis filter (harness
/// self-test hook).
inline VerificationRun verify_thm_d_geq2(
    int d, int t, int n_max, int samples, std::uint64_t seed, int f_cap = 200,
    const std::vector<LoopedSimpleGraph>& injected = {}) {
  if (d < 2 || t < 1 || d < 2 * t - 1)
    throw ParamsInvalid("need d >= 2, t >= 1, d >= 2t-1");
  detail::Stopwatch timer;
  VerificationRun run;
  run.theorem = "d_geq2(d=" + std::to_string(d) + ",t=" + std::to_string(t) + ")";
  run.seed = seed;
  run.requested_samples = samples;
  std::mt19937_64 rng(seed);

  auto check_instance = [&](const LoopedSimpleGraph& g) {
    ++run.instances_checked;
    for (const auto& F : detail::f_sets(g, t, f_cap, rng)) {
      ++run.conclusion_checks;
      if (!check_thm_d_geq2_instance(g, F, d, t))
        run.counterexamples.push_back(
            {g, F, d, t, "G^{[d-t]} - F not L_d-rigid"});
    }
  };

  for (const auto& g : injected) check_instance(g);

  std::uniform_int_distribution<int> n_dist(1, n_max);
  std::uniform_real_distribution<double> dens_dist(0.15, 0.9);
  const int attempt_budget = samples * 50;
  int found = 0;
  while (found < samples && run.sampler_attempts < attempt_budget) {
    ++run.sampler_attempts;
    int n = n_dist(rng);
    double density = dens_dist(rng);
    auto g = sample_weakly_balanced(n, 2 * t, density, rng(), 50);
    if (!g) continue;
    ++found;
    check_instance(*g);
  }
  run.budget_exhausted = found < samples;
  run.wall_seconds = timer.seconds();
  return run;
}

inline bool check_thm_weak6_instance(const LoopedSimpleGraph& g,
                                     const std::vector<Element>& F) {
  return is_Ld_rigid(delete_elements(g, F), 2);
}

/// Theorem: every weakly 6-balanced G minus any F with |F| <= 3 stays
/// L_2-rigid.
inline VerificationRun verify_thm_weak6(
    int n_max, int samples, std::uint64_t seed, int f_cap = 200,
    const std::vector<LoopedSimpleGraph>& injected = {}) {
  detail::Stopwatch timer;
  VerificationRun run;
  run.theorem = "weak6";
  run.seed = seed;
  run.requested_samples = samples;
  std::mt19937_64 rng(seed);

  auto check_instance = [&](const LoopedSimpleGraph& g) {
    ++run.instances_checked;
    for (const auto& F : detail::f_sets(g, 3, f_cap, rng)) {
      ++run.conclusion_checks;
      if (!check_thm_weak6_instance(g, F))
        run.counterexamples.push_back({g, F, 2, 3, "G - F not L_2-rigid"});
    }
  };

  for (const auto& g : injected) check_instance(g);

  std::uniform_int_distribution<int> n_dist(1, n_max);
  std::uniform_real_distribution<double> dens_dist(0.15, 0.9);
  const int attempt_budget = samples * 50;
  int found = 0;
  while (found < samples && run.sampler_attempts < attempt_budget) {
    ++run.sampler_attempts;
    auto g = sample_weakly_balanced(n_dist(rng), 6, dens_dist(rng), rng(), 50);
    if (!g) continue;
    ++found;
    check_instance(*g);
  }
  run.budget_exhausted = found < samples;
  run.wall_seconds = timer.seconds();
  return run;
}

/// Theorem: every weakly 4-balanced, essentially 6-balanced G is
/// globally L_2-rigid (checked through the combinatorial
/// characterisation).
inline VerificationRun verify_thm_main(
    int n_max, int samples, std::uint64_t seed,
    const std::vector<LoopedSimpleGraph>& injected = {}) {
  detail::Stopwatch timer;
  VerificationRun run;
  run.theorem = "main";
  run.seed = seed;
  run.requested_samples = samples;
  std::mt19937_64 rng(seed);

  auto check_instance = [&](const LoopedSimpleGraph& g) {
    ++run.instances_checked;
    ++run.conclusion_checks;
    if (!is_globally_L2_rigid_char(g).globally_rigid)
      run.counterexamples.push_back({g, {}, 2, 0, "not globally L_2-rigid"});
  };

  for (const auto& g : injected) check_instance(g);

  // essential 6-balancedness needs |V| >= 7
  if (n_max < 7) {
    run.budget_exhausted = samples > 0;
    run.wall_seconds = timer.seconds();
    return run;
  }
  std::uniform_int_distribution<int> n_dist(7, n_max);
  std::uniform_real_distribution<double> dens_dist(0.2, 0.9);
  const int attempt_budget = samples * 80;
  int found = 0;
  while (found < samples && run.sampler_attempts < attempt_budget) {
    ++run.sampler_attempts;
    auto g = sample_weakly_balanced(n_dist(rng), 4, dens_dist(rng), rng(), 50);
    if (!g || !is_essentially_k_balanced(*g, 6).holds) continue;
    ++found;
    check_instance(*g);
  }
  run.budget_exhausted = found < samples;
  run.wall_seconds = timer.seconds();
  return run;
}

/// The central cross-oracle identity: rank_by_cover(g, d, t) must equal
/// the randomized matrix rank of g^{[d-t]} on every isomorph-reduced
/// looped simple graph (<= 1 loop per vertex) up to n_max vertices.
inline VerificationRun cross_oracle_sweep(int d, int t, int n_max,
                                          int trials = default_trials(),
                                          std::uint64_t seed = kDefaultSeed) {
  detail::Stopwatch timer;
  VerificationRun run;
  run.theorem = "rank_cover(d=" + std::to_string(d) + ",t=" + std::to_string(t) + ")";
  run.seed = seed;
  for (int n = 1; n <= n_max; ++n) {
    for (const LoopedSimpleGraph& g : enumerate_looped_graphs(n, 1)) {
      ++run.instances_checked;
      ++run.conclusion_checks;
      RankReport cover = rank_by_cover(g, d, t);
      RankReport oracle =
          generic_rank(add_uniform_loops(g, d - t), d, trials, seed);
      if (cover.rank != oracle.rank)
        run.counterexamples.push_back(
            {g, {}, d, t,
             "cover formula " + std::to_string(cover.rank) +
                 " != matrix oracle " + std::to_string(oracle.rank)});
    }
  }
  run.wall_seconds = timer.seconds();
  return run;
}

}  // namespace lcf
