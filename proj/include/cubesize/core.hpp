#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubesize/integers.hpp"

namespace cubesize {

/// A point or translation of the integer lattice Z^d.
using LatticeVector = std::vector<Int>;

inline LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline LatticeVector negate(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const LatticeVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline bool is_primitive(const LatticeVector& a) { return content(a) == 1; }

inline Int norm_squared(const LatticeVector& a) {
  Int s = 0;
  for (const Int& x : a) s += x * x;
  return s;
}

/// A nonzero integer vector with coprime entries, used as a lattice
/// direction / linear functional.
struct Direction {
  LatticeVector coords;

  static Direction of(LatticeVector c) {
    if (is_zero(c)) throw std::invalid_argument("direction must be nonzero");
    if (content(c) != 1) throw std::invalid_argument("direction must be primitive");
    return Direction{std::move(c)};
  }

  std::size_t dim() const { return coords.size(); }
};

/// A lattice polytope stored as a finite point set. Every width below is a
/// max-minus-min of a dot product over the points, so only the convex hull
/// of the set matters; carrying non-vertex points is harmless.
struct LatticePolytope {
  std::vector<LatticeVector> points;
  int dim = 0;

  LatticePolytope() = default;

  LatticePolytope(std::vector<LatticeVector> pts, int d) : points(std::move(pts)), dim(d) {
    if (dim < 1) throw std::invalid_argument("polytope dimension must be >= 1");
    if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != dim)
        throw std::invalid_argument("point dimension mismatch");
  }

  static LatticePolytope of(std::vector<LatticeVector> pts) {
    if (pts.empty()) throw std::invalid_argument("polytope needs at least one point");
    int d = static_cast<int>(pts.front().size());
    return LatticePolytope(std::move(pts), d);
  }
};

/// Width of P along an integer functional: max dot(dir,x) - min dot(dir,x).
/// `dir` does not have to be primitive (or nonzero).
inline Int width(const LatticePolytope& P, const LatticeVector& dir) {
  if (dir.size() != static_cast<std::size_t>(P.dim))
    throw std::invalid_argument("direction dimension does not match polytope");
  Int lo = dot(dir, P.points.front());
  Int hi = lo;
  for (std::size_t i = 1; i < P.points.size(); ++i) {
    Int v = dot(dir, P.points[i]);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

inline Int width(const LatticePolytope& P, const Direction& dir) {
  return width(P, dir.coords);
}

/// Widths along the d coordinate axes.
inline std::vector<Int> coordinate_widths(const LatticePolytope& P) {
  std::vector<Int> lo(P.dim), hi(P.dim);
  for (int i = 0; i < P.dim; ++i) lo[i] = hi[i] = P.points.front()[i];
  for (const auto& p : P.points)
    for (int i = 0; i < P.dim; ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (p[i] > hi[i]) hi[i] = p[i];
    }
  std::vector<Int> w(P.dim);
  for (int i = 0; i < P.dim; ++i) w[i] = hi[i] - lo[i];
  return w;
}

/// Smallest l such that a lattice translate of P fits in [0,l]^d.
inline Int e_box(const LatticePolytope& P) {
  auto w = coordinate_widths(P);
  return *std::max_element(w.begin(), w.end());
}

struct NormalizedPolytope {
  LatticePolytope polytope;
  LatticeVector shift;  // the translation that was applied
};

/// Translate P so every coordinate minimum is 0; returns the applied shift.
inline NormalizedPolytope normalize_translation(const LatticePolytope& P) {
  LatticeVector lo = P.points.front();
  for (const auto& p : P.points)
    for (int i = 0; i < P.dim; ++i)
      if (p[i] < lo[i]) lo[i] = p[i];
  LatticeVector shift = negate(lo);
  std::vector<LatticeVector> pts;
  pts.reserve(P.points.size());
  for (const auto& p : P.points) pts.push_back(add(p, shift));
  return NormalizedPolytope{LatticePolytope(std::move(pts), P.dim), std::move(shift)};
}

}  // namespace cubesize
