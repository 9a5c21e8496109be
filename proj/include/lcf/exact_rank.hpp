#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcf/graph.hpp"

namespace lcf {

// Exact-rational rank for debugging tiny instances: realizations with
// small random integer coordinates, elimination over Q with arbitrary
// precision. The modular oracle is the production path.

struct IntegerFramework {
  LoopedSimpleGraph graph;
  int dim = 0;
  std::vector<std::int64_t> positions;
  std::vector<std::int64_t> normals;
};

inline IntegerFramework random_integer_framework(const LoopedSimpleGraph& g,
                                                 int d, std::uint64_t seed,
                                                 int coord_range = 1000) {
  if (d < 1) throw PreconditionViolated("dimension must be >= 1");
  IntegerFramework fw;
  fw.graph = g;
  fw.dim = d;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-coord_range, coord_range);
  fw.positions.resize(static_cast<std::size_t>(g.vertex_count()) * d);
  for (auto& x : fw.positions) x = dist(rng);
  fw.normals.resize(static_cast<std::size_t>(g.loop_count()) * d);
  for (std::size_t i = 0; i < fw.normals.size(); i += d) {
    bool all_zero = true;
    do {
      all_zero = true;
      for (int c = 0; c < d; ++c) {
        fw.normals[i + c] = dist(rng);
        if (fw.normals[i + c] != 0) all_zero = false;
      }
    } while (all_zero);
  }
  return fw;
}

inline int exact_rank(const IntegerFramework& fw) {
  using Rational = boost::multiprecision::cpp_rational;
  const LoopedSimpleGraph& g = fw.graph;
  const int d = fw.dim;
  const int rows = g.element_count();
  const int cols = d * g.vertex_count();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
  int r = 0;
  for (const Edge& e : g.edges()) {
    for (int c = 0; c < d; ++c) {
      std::int64_t diff = fw.positions[static_cast<std::size_t>(e.u) * d + c] -
                          fw.positions[static_cast<std::size_t>(e.v) * d + c];
      a[r][d * e.u + c] = diff;
      a[r][d * e.v + c] = -diff;
    }
    ++r;
  }
  for (int i = 0; i < g.loop_count(); ++i) {
    VertexId v = g.loops()[i].v;
    for (int c = 0; c < d; ++c)
      a[r][d * v + c] = fw.normals[static_cast<std::size_t>(i) * d + c];
    ++r;
  }

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rational factor = a[i][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[i][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace lcf
