#pragma once

#include <vector>

#include "cubesize/core.hpp"

// Small polytopes reused across the suites.
namespace fixtures {

using cubesize::Int;
using cubesize::LatticePolytope;
using cubesize::LatticeVector;

inline LatticePolytope make(std::vector<std::vector<int>> rows) {
  std::vector<LatticeVector> pts;
  for (const auto& r : rows) {
    LatticeVector p;
    for (int c : r) p.push_back(Int(c));
    pts.push_back(std::move(p));
  }
  return LatticePolytope::of(std::move(pts));
}

// axis-box extent 3, cube size 2
inline LatticePolytope skew_triangle() { return make({{0, 0}, {1, 0}, {2, 3}}); }

inline LatticePolytope unit_square() { return make({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

inline LatticePolytope unit_cube() {
  return make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

// coordinate widths (2,4,10); every +-1-combination direction is wide but
// (2,1,1) has width 9
inline LatticePolytope tall_wedge() {
  return make({{1, 0, 0}, {1, 1, 0}, {0, 4, 0}, {2, 4, 0}, {0, 1, 1}, {0, 4, 1}, {0, 1, 10}});
}

// all coordinate widths 5, cube size at most 4
inline LatticePolytope tilted_block() {
  return make({{0, 3, 1}, {5, 2, 3}, {4, 0, 4}, {2, 5, 4}, {1, 3, 0}, {3, 4, 5}});
}

}  // namespace fixtures
