#pragma once

#include <vector>

#include "lcf/graph.hpp"

namespace lcf {

/// A cover certificate for the rank formula: vertex sets
/// {X_0, X_1, ..., X_k} with X_0 the looped member (possibly empty),
/// together with the excluded element set T.
struct Cover {
  std::vector<VertexId> X0;
  std::vector<std::vector<VertexId>> parts;
  std::vector<Element> excluded;
};

/// An admissible 1-thin cover for the 2-dimensional upper-bound
/// certificate: the looped member X_0, parts X_1..X_k, and the loop
/// set L' removed before covering.
struct ThinCover2D {
  std::vector<VertexId> X0;
  std::vector<std::vector<VertexId>> parts;
  std::vector<Loop> Lprime;
};

}  // namespace lcf
