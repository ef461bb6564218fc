#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubesize/core.hpp"
#include "cubesize/unimodular.hpp"

namespace cubesize {

/// Result of flattening a lower-dimensional polytope: `embedding` is a
/// unimodular map of the ambient space sending P into the subspace spanned
/// by the first `rank` axes (all later coordinates 0 on the image), and
/// `reduced` is that image with the trailing zero coordinates dropped.
/// A single point has rank 0 and reduces to the origin on one axis.
struct DimensionReduction {
  int rank = 0;
  LatticePolytope reduced;
  AffineUnimodularMap embedding;
};

namespace detail {

// Unimodular row operations applied simultaneously to the working vectors
// and to the accumulated matrix U.
struct RowReducer {
  IntMatrix u;
  std::vector<LatticeVector>& vecs;

  RowReducer(int d, std::vector<LatticeVector>& v) : vecs(v) {
    u.assign(d, std::vector<Int>(d, 0));
    for (int i = 0; i < d; ++i) u[i][i] = 1;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    std::swap(u[a], u[b]);
    for (auto& v : vecs) std::swap(v[a], v[b]);
  }

  void negate_row(int a) {
    for (auto& x : u[a]) x = -x;
    for (auto& v : vecs) v[a] = -v[a];
  }

  // row[q] -= t * row[p]
  void add_multiple(int q, int p, const Int& t) {
    if (t == 0) return;
    for (std::size_t j = 0; j < u.size(); ++j) u[q][j] -= t * u[p][j];
    for (auto& v : vecs) v[q] -= t * v[p];
  }
};

}  // namespace detail

/// Affine rank of P together with the flattening map, or nullopt when P is
/// full-dimensional. Edge vectors from the first point are column-reduced
/// by unimodular row operations until each new vector contributes one pivot.
inline std::optional<DimensionReduction> reduce_dimension(const LatticePolytope& P) {
  const int d = P.dim;
  const LatticeVector& v0 = P.points.front();
  std::vector<LatticeVector> work;
  work.reserve(P.points.size() - 1);
  for (std::size_t k = 1; k < P.points.size(); ++k) work.push_back(sub(P.points[k], v0));

  detail::RowReducer red(d, work);
  int rank = 0;
  for (std::size_t k = 0; k < work.size() && rank < d; ++k) {
    // gcd-reduce entries rank..d-1 of work[k] to a single pivot at `rank`
    while (true) {
      int pivot = -1;
      for (int i = rank; i < d; ++i)
        if (work[k][i] != 0 && (pivot < 0 || abs_int(work[k][i]) < abs_int(work[k][pivot])))
          pivot = i;
      if (pivot < 0) break;  // zero below rank, no new pivot
      bool clean = true;
      for (int i = rank; i < d; ++i) {
        if (i == pivot || work[k][i] == 0) continue;
        Int q = work[k][i] / work[k][pivot];  // truncated division shrinks |entry|
        red.add_multiple(i, pivot, q);
        if (work[k][i] != 0) clean = false;
      }
      if (clean) {
        red.swap_rows(rank, pivot);
        if (work[k][rank] < 0) red.negate_row(rank);
        ++rank;
        break;
      }
    }
  }
  if (rank == d) return std::nullopt;

  LatticeVector t(d);
  for (int i = 0; i < d; ++i) t[i] = -dot(red.u[i], v0);
  auto embedding = AffineUnimodularMap::of(red.u, t);

  const int rd = rank > 0 ? rank : 1;  // a point still needs a 1-D home
  std::vector<LatticeVector> pts;
  pts.reserve(P.points.size());
  for (const auto& p : P.points) {
    LatticeVector q = embedding.apply(p);
    q.resize(rd);
    pts.push_back(std::move(q));
  }
  return DimensionReduction{rank, LatticePolytope(std::move(pts), rd), std::move(embedding)};
}

inline int affine_rank(const LatticePolytope& P) {
  auto r = reduce_dimension(P);
  return r ? r->rank : P.dim;
}

}  // namespace cubesize
