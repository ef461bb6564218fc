#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "cubesize/core.hpp"
#include "cubesize/dimension.hpp"
#include "cubesize/unimodular.hpp"

namespace cubesize {

// Deterministic helpers for tests and the bench command. The modulo draw is
// intentionally used instead of std::uniform_int_distribution so streams
// are identical across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Random full-dimensional polytope with point coordinates in [0, coord_max].
inline LatticePolytope random_polytope(std::mt19937_64& rng, int d, int coord_max,
                                       int min_pts, int max_pts) {
  if (coord_max < 1) throw std::invalid_argument("random_polytope needs coord_max >= 1");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int n = uniform_int(rng, min_pts, max_pts);
    std::vector<LatticeVector> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
      LatticeVector p(d);
      for (int c = 0; c < d; ++c) p[c] = uniform_int(rng, 0, coord_max);
      pts.push_back(std::move(p));
    }
    LatticePolytope P(std::move(pts), d);
    if (affine_rank(P) == d) return P;
  }
  throw std::runtime_error("random_polytope: could not sample a full-dimensional set");
}

/// Random affine unimodular map built from elementary shears, swaps and
/// sign flips. Entry growth is controlled by `steps` and `shear_max`.
inline AffineUnimodularMap random_unimodular(std::mt19937_64& rng, int d, int steps = 6,
                                             int shear_max = 2, int translation_max = 5) {
  auto T = AffineUnimodularMap::identity(d);
  for (int s = 0; s < steps; ++s) {
    int kind = uniform_int(rng, 0, 2);
    if (kind == 0 && d >= 2) {  // shear: coordinate i += c * coordinate j
      int i = uniform_int(rng, 0, d - 1);
      int j = uniform_int(rng, 0, d - 2);
      if (j >= i) ++j;
      int c = uniform_int(rng, 1, shear_max);
      if (uniform_below(rng, 2) == 0) c = -c;
      auto E = AffineUnimodularMap::identity(d);
      E.matrix[i][j] = c;
      T = compose(E, T);
    } else if (kind == 1 && d >= 2) {  // swap two coordinates
      int i = uniform_int(rng, 0, d - 1);
      int j = uniform_int(rng, 0, d - 2);
      if (j >= i) ++j;
      std::vector<int> perm(d);
      for (int k = 0; k < d; ++k) perm[k] = k;
      std::swap(perm[i], perm[j]);
      T = compose(AffineUnimodularMap::permutation(perm), T);
    } else {  // flip the sign of one coordinate
      int i = uniform_int(rng, 0, d - 1);
      auto E = AffineUnimodularMap::identity(d);
      E.matrix[i][i] = -1;
      T = compose(E, T);
    }
  }
  for (int i = 0; i < d; ++i)
    T.translation[i] = uniform_int(rng, -translation_max, translation_max);
  return T;
}

}  // namespace cubesize
