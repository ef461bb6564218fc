#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubesize/core.hpp"

namespace cubesize {

/// z-component of (b-a) x (c-a): positive for a counter-clockwise turn.
inline Int cross2(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

inline LatticeVector cross3(const LatticeVector& u, const LatticeVector& v) {
  return LatticeVector{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                       u[0] * v[1] - u[1] * v[0]};
}

/// Monotone-chain hull. Returns the counter-clockwise ring of extreme
/// vertices (collinear boundary points dropped). Size 1 and 2 indicate a
/// point or a segment.
inline std::vector<LatticeVector> hull_ring_2d(std::vector<LatticeVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticeVector> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) {  // all input collinear: keep the two extremes
    std::vector<LatticeVector> seg{pts.front(), pts.back()};
    return seg;
  }
  return h;
}

/// One supporting facet plane of a 3D hull: dot(normal, x) <= offset for
/// every point, with equality exactly on the facet. The facet polygon is
/// fanned into outward-oriented triangles.
struct Facet3 {
  LatticeVector normal;  // primitive, outward
  Int offset;
  std::vector<std::array<LatticeVector, 3>> triangles;
};

/// Facet planes of the convex hull of a full-dimensional 3D point set,
/// found by checking every point triple against the whole set. Intended
/// for the small instances the enumeration algorithms run on.
inline std::vector<Facet3> hull_facets_3d(const LatticePolytope& P) {
  if (P.dim != 3) throw std::invalid_argument("hull_facets_3d expects dimension 3");
  std::vector<LatticeVector> pts = P.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();

  std::set<std::pair<LatticeVector, Int>> planes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        LatticeVector nor = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (is_zero(nor)) continue;
        Int h = dot(nor, pts[i]);
        Int lo = h, hi = h;
        for (const auto& p : pts) {
          Int v = dot(nor, p);
          if (v < lo) lo = v;
          if (v > hi) hi = v;
        }
        if (hi > h && lo < h) continue;  // cuts through the set
        if (hi > h) {                    // flip to make the normal outward
          nor = negate(nor);
          h = -h;
        }
        Int g = content(nor);
        if (g > 1)
          for (auto& c : nor) c /= g;
        h = dot(nor, pts[i]);
        planes.emplace(std::move(nor), std::move(h));
      }

  std::vector<Facet3> facets;
  for (const auto& [nor, h] : planes) {
    std::vector<LatticeVector> on_plane;
    for (const auto& p : pts)
      if (dot(nor, p) == h) on_plane.push_back(p);
    // project along the largest normal component; injective on the plane
    int drop = 0;
    for (int c = 1; c < 3; ++c)
      if (abs_int(nor[c]) > abs_int(nor[drop])) drop = c;
    std::map<LatticeVector, LatticeVector> lift;
    std::vector<LatticeVector> proj;
    proj.reserve(on_plane.size());
    for (const auto& p : on_plane) {
      LatticeVector q;
      for (int c = 0; c < 3; ++c)
        if (c != drop) q.push_back(p[c]);
      lift[q] = p;
      proj.push_back(std::move(q));
    }
    auto ring2 = hull_ring_2d(std::move(proj));
    if (ring2.size() < 3) continue;  // degenerate plane contact, not a facet
    std::vector<LatticeVector> ring;
    ring.reserve(ring2.size());
    for (const auto& q : ring2) ring.push_back(lift.at(q));
    if (dot(cross3(sub(ring[1], ring[0]), sub(ring[2], ring[0])), nor) < 0)
      std::reverse(ring.begin(), ring.end());
    Facet3 f{nor, h, {}};
    for (std::size_t i = 1; i + 1 < ring.size(); ++i)
      f.triangles.push_back({ring[0], ring[i], ring[i + 1]});
    facets.push_back(std::move(f));
  }
  if (facets.size() < 4)
    throw std::invalid_argument("hull_facets_3d: point set is not full-dimensional");
  return facets;
}

}  // namespace cubesize
