#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubesize/core.hpp"

namespace cubesize {

using IntMatrix = std::vector<std::vector<Int>>;

inline Int det(const IntMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  // cofactor expansion along the first row; fine for the small d used here
  Int d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, std::vector<Int>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Int term = m[0][j] * det(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

/// x |-> Ax + v with integer A, |det A| = 1, integer v. Closed under
/// composition and exactly invertible, so certificates can be replayed
/// and undone without any loss.
struct AffineUnimodularMap {
  IntMatrix matrix;        // d x d, rows are the image coordinate functionals
  LatticeVector translation;

  int dim() const { return static_cast<int>(matrix.size()); }

  static AffineUnimodularMap of(IntMatrix m, LatticeVector v) {
    std::size_t d = m.size();
    if (d == 0 || v.size() != d) throw std::invalid_argument("map dimension mismatch");
    for (const auto& row : m)
      if (row.size() != d) throw std::invalid_argument("matrix is not square");
    Int dd = det(m);
    if (dd != 1 && dd != -1) throw std::invalid_argument("matrix is not unimodular");
    return AffineUnimodularMap{std::move(m), std::move(v)};
  }

  static AffineUnimodularMap identity(int d) {
    IntMatrix m(d, std::vector<Int>(d, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return AffineUnimodularMap{std::move(m), LatticeVector(d, 0)};
  }

  static AffineUnimodularMap translate(LatticeVector v) {
    auto t = identity(static_cast<int>(v.size()));
    t.translation = std::move(v);
    return t;
  }

  /// Coordinate permutation: image coordinate i reads source coordinate
  /// perm[i].
  static AffineUnimodularMap permutation(const std::vector<int>& perm) {
    int d = static_cast<int>(perm.size());
    IntMatrix m(d, std::vector<Int>(d, 0));
    for (int i = 0; i < d; ++i) m[i][perm[i]] = 1;
    return AffineUnimodularMap{std::move(m), LatticeVector(d, 0)};
  }

  LatticeVector apply(const LatticeVector& x) const {
    if (x.size() != matrix.size()) throw std::invalid_argument("map/point dimension mismatch");
    LatticeVector y(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) y[i] = dot(matrix[i], x) + translation[i];
    return y;
  }
};

/// Pointwise image {Ax + v : x in P}.
inline LatticePolytope apply_map(const LatticePolytope& P, const AffineUnimodularMap& T) {
  if (T.dim() != P.dim) throw std::invalid_argument("map/polytope dimension mismatch");
  std::vector<LatticeVector> pts;
  pts.reserve(P.points.size());
  for (const auto& p : P.points) pts.push_back(T.apply(p));
  return LatticePolytope(std::move(pts), P.dim);
}

/// compose(T1, T2) acts as T1 after T2.
inline AffineUnimodularMap compose(const AffineUnimodularMap& T1, const AffineUnimodularMap& T2) {
  int d = T1.dim();
  if (d != T2.dim()) throw std::invalid_argument("map dimension mismatch");
  IntMatrix m(d, std::vector<Int>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) m[i][j] += T1.matrix[i][k] * T2.matrix[k][j];
  LatticeVector v(d);
  for (int i = 0; i < d; ++i) v[i] = dot(T1.matrix[i], T2.translation) + T1.translation[i];
  return AffineUnimodularMap{std::move(m), std::move(v)};
}

inline AffineUnimodularMap invert(const AffineUnimodularMap& T) {
  int d = T.dim();
  Int dd = det(T.matrix);
  // adjugate over Z; |det| = 1 makes inv = det * adj exactly integral
  IntMatrix inv(d, std::vector<Int>(d));
  if (d == 1) {
    inv[0][0] = dd;  // dd is +-1
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        IntMatrix minor(d - 1, std::vector<Int>(d - 1));
        int rr = 0;
        for (int r = 0; r < d; ++r) {
          if (r == i) continue;
          int cc = 0;
          for (int c = 0; c < d; ++c) {
            if (c == j) continue;
            minor[rr][cc++] = T.matrix[r][c];
          }
          ++rr;
        }
        Int cof = det(minor);
        if ((i + j) % 2 != 0) cof = -cof;
        inv[j][i] = dd * cof;
      }
  }
  LatticeVector w(d);
  for (int i = 0; i < d; ++i) w[i] = -dot(inv[i], T.translation);
  return AffineUnimodularMap{std::move(inv), std::move(w)};
}

inline bool operator==(const AffineUnimodularMap& a, const AffineUnimodularMap& b) {
  return a.matrix == b.matrix && a.translation == b.translation;
}

/// Coordinate widths of P sorted ascending, together with the coordinate
/// permutation realizing the sorted order. Stable: ties keep the original
/// coordinate order.
struct WidthProfile {
  std::vector<Int> widths;
  AffineUnimodularMap perm;
};

inline WidthProfile width_profile(const LatticePolytope& P) {
  auto w = coordinate_widths(P);
  std::vector<int> order(P.dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  std::vector<Int> sorted(P.dim);
  for (int i = 0; i < P.dim; ++i) sorted[i] = w[order[i]];
  return WidthProfile{std::move(sorted), AffineUnimodularMap::permutation(order)};
}

/// A computed box invariant plus the map realizing it: the image of the
/// input under `map` lies in [0,value]^d with coordinate widths
/// `image_widths`, max(image_widths) == value.
struct SizeCertificate {
  Int value;
  AffineUnimodularMap map;
  std::vector<Int> image_widths;
  std::int64_t iterations = 0;
};

}  // namespace cubesize
