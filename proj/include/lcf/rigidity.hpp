#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcf/cover.hpp"
#include "lcf/field.hpp"
#include "lcf/graph.hpp"

namespace lcf {

inline constexpr std::uint64_t kDefaultSeed = 0x1c6f5eed;

/// Default number of randomized rank trials; overridable via LCF_TRIALS.
inline int default_trials() {
  if (const char* env = std::getenv("LCF_TRIALS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 3;
}

/// A linearly constrained framework (G, p, q) over GF(p): positions
/// for every vertex and a nonzero normal for every loop.
struct Framework {
  LoopedSimpleGraph graph;
  int dim = 0;
  std::vector<std::uint64_t> positions;  // dim entries per vertex
  std::vector<std::uint64_t> normals;    // dim entries per loop, in loop order

  std::uint64_t position(VertexId v, int coord) const {
    return positions[static_cast<std::size_t>(v) * dim + coord];
  }
  std::uint64_t normal(int loop_index, int coord) const {
    return normals[static_cast<std::size_t>(loop_index) * dim + coord];
  }
};

/// Deterministic per seed. Coordinates are uniform in GF(p); loop
/// normals are redrawn until nonzero.
inline Framework random_framework(const LoopedSimpleGraph& g, int d,
                                  std::uint64_t seed) {
  if (d < 1) throw PreconditionViolated("dimension must be >= 1");
  Framework fw;
  fw.graph = g;
  fw.dim = d;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, kFieldPrime - 1);
  fw.positions.resize(static_cast<std::size_t>(g.vertex_count()) * d);
  for (auto& x : fw.positions) x = dist(rng);
  fw.normals.resize(static_cast<std::size_t>(g.loop_count()) * d);
  for (std::size_t i = 0; i < fw.normals.size(); i += d) {
    do {
      for (int c = 0; c < d; ++c) fw.normals[i + c] = dist(rng);
    } while (std::all_of(fw.normals.begin() + i, fw.normals.begin() + i + d,
                         [](std::uint64_t x) { return x == 0; }));
  }
  return fw;
}

/// The (|E|+|L|) x d|V| rigidity matrix. The row of edge v_i v_j has
/// p_i - p_j in i's coordinate block and p_j - p_i in j's; the row of
/// a loop at v_i has its normal q in i's block; zeros elsewhere.
struct RigidityMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> a;  // row-major
  std::vector<Element> row_labels;

  std::uint64_t& at(int r, int c) {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  std::uint64_t at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

inline RigidityMatrix build_matrix(const Framework& fw) {
  const LoopedSimpleGraph& g = fw.graph;
  const int d = fw.dim;
  RigidityMatrix m;
  m.rows = g.element_count();
  m.cols = d * g.vertex_count();
  m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  m.row_labels = g.elements();
  int r = 0;
  for (const Edge& e : g.edges()) {
    for (int c = 0; c < d; ++c) {
      std::uint64_t diff = sub_mod(fw.position(e.u, c), fw.position(e.v, c));
      m.at(r, d * e.u + c) = diff;
      m.at(r, d * e.v + c) = sub_mod(0, diff);
    }
    ++r;
  }
  for (int i = 0; i < g.loop_count(); ++i) {
    VertexId v = g.loops()[i].v;
    for (int c = 0; c < d; ++c) m.at(r, d * v + c) = fw.normal(i, c);
    ++r;
  }
  return m;
}

/// In-place Gaussian elimination over GF(p); pivot = first nonzero.
inline int rank_mod_p(RigidityMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    std::uint64_t inv = inv_mod(m.at(rank, col));
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      std::uint64_t factor = mul_mod(m.at(r, col), inv);
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = sub_mod(m.at(r, c), mul_mod(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

enum class RankMethod { kMatrixOracle, kCoverFormula };

struct RankReport {
  int rank = 0;
  int trials = 0;
  int modulus_bits = kFieldBits;
  RankMethod method = RankMethod::kMatrixOracle;
  std::optional<Cover> certificate;
};

/// Generic rank of the linearly constrained rigidity matroid, as the
/// max of `trials` evaluations at independent random realizations.
/// Each trial underestimates with probability at most d|V|/p, so the
/// reported value is wrong with probability < (d|V|/p)^trials.
inline RankReport generic_rank(const LoopedSimpleGraph& g, int d,
                               int trials = default_trials(),
                               std::uint64_t seed = kDefaultSeed) {
  if (trials < 1) throw PreconditionViolated("trials must be >= 1");
  RankReport report;
  report.trials = trials;
  report.method = RankMethod::kMatrixOracle;
  for (int i = 0; i < trials; ++i) {
    std::uint64_t trial_seed = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    Framework fw = random_framework(g, d, trial_seed);
    report.rank = std::max(report.rank, rank_mod_p(build_matrix(fw)));
  }
  return report;
}

inline bool is_Ld_rigid(const LoopedSimpleGraph& g, int d, RankReport* out = nullptr,
                        int trials = default_trials(),
                        std::uint64_t seed = kDefaultSeed) {
  RankReport report = generic_rank(g, d, trials, seed);
  if (out) *out = report;
  return report.rank == d * g.vertex_count();
}

struct RedundancyResult {
  bool redundant = false;
  std::optional<Element> failing_element;  // first single deletion that breaks rigidity
};

/// Redundant L_d-rigidity: G - f stays rigid for every single element f.
inline RedundancyResult is_redundantly_Ld_rigid(
    const LoopedSimpleGraph& g, int d, int trials = default_trials(),
    std::uint64_t seed = kDefaultSeed) {
  RedundancyResult result;
  for (const Element& f : g.elements()) {
    LoopedSimpleGraph h = delete_elements(g, {f});
    if (!is_Ld_rigid(h, d, nullptr, trials, seed)) {
      result.redundant = false;
      result.failing_element = f;
      return result;
    }
  }
  result.redundant = true;
  return result;
}

struct GlobalRigidityDiagnosis {
  bool globally_rigid = false;
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> component_ok;  // condition (i) per component
  std::optional<std::array<VertexId, 2>> failing_pair;        // condition (ii)
  std::optional<std::vector<VertexId>> loopless_component;    // witness for (ii)
};

/// The combinatorial characterisation of global L_2-rigidity:
/// (i) every connected component is a single vertex with two loops or
///     is redundantly L_2-rigid, and
/// (ii) removing any two vertices leaves no loopless component.
inline GlobalRigidityDiagnosis is_globally_L2_rigid_char(
    const LoopedSimpleGraph& g, int trials = default_trials(),
    std::uint64_t seed = kDefaultSeed) {
  GlobalRigidityDiagnosis diag;
  diag.components = components(g);
  diag.globally_rigid = true;
  for (const auto& comp : diag.components) {
    bool ok;
    if (comp.size() == 1) {
      ok = g.loops_at(comp[0]) >= 2;
    } else {
      LoopedSimpleGraph sub = induced_subgraph(g, comp);
      ok = is_redundantly_Ld_rigid(sub, 2, trials, seed).redundant;
    }
    diag.component_ok.push_back(ok);
    if (!ok) diag.globally_rigid = false;
  }
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (VertexId x = 0; x < n && !diag.failing_pair; ++x) {
    for (VertexId y = x + 1; y < n && !diag.failing_pair; ++y) {
      removed.assign(n, 0);
      removed[x] = removed[y] = 1;
      for (const auto& comp : components_excluding(g, removed)) {
        int loops = 0;
        for (VertexId v : comp) loops += g.loops_at(v);
        if (loops == 0) {
          diag.failing_pair = {x, y};
          diag.loopless_component = comp;
          diag.globally_rigid = false;
          break;
        }
      }
    }
  }
  return diag;
}

}  // namespace lcf
