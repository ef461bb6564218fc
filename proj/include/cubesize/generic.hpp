#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubesize/core.hpp"
#include "cubesize/dimension.hpp"
#include "cubesize/hull.hpp"
#include "cubesize/reduce2d.hpp"
#include "cubesize/unimodular.hpp"

namespace cubesize {

/// Exact ball contained in the polytope: centered at the solid centroid,
/// radius squared is the rational squared distance to the nearest facet.
/// Any direction v then has width >= 2*||v||*R over the polytope, which is
/// what prunes the direction enumeration below.
struct InscribedBall {
  std::vector<Rat> center;
  Rat radius_squared;
};

namespace detail {

inline Rat plane_distance_squared(const LatticeVector& normal, const Int& offset,
                                  const std::vector<Rat>& M) {
  Rat nm = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) nm += Rat(normal[i]) * M[i];
  Rat gap = Rat(offset) - nm;
  return gap * gap / Rat(norm_squared(normal));
}

}  // namespace detail

inline InscribedBall inscribed_ball(const LatticePolytope& P) {
  if (P.dim != 2 && P.dim != 3)
    throw std::invalid_argument("inscribed_ball supports dimensions 2 and 3");
  if (reduce_dimension(P))
    throw std::invalid_argument("inscribed_ball: degenerate polytope, reduce dimension first");

  std::vector<Rat> M(P.dim);
  Rat r2;
  if (P.dim == 2) {
    auto ring = hull_ring_2d(P.points);
    Rat area2 = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& a = ring[i];
      const auto& b = ring[(i + 1) % ring.size()];
      Int cr = a[0] * b[1] - a[1] * b[0];
      area2 += Rat(cr);
      cx += Rat((a[0] + b[0]) * cr);
      cy += Rat((a[1] + b[1]) * cr);
    }
    M[0] = cx / (3 * area2);
    M[1] = cy / (3 * area2);
    bool first = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& a = ring[i];
      const auto& b = ring[(i + 1) % ring.size()];
      LatticeVector e = sub(b, a);
      LatticeVector n{e[1], -e[0]};  // outward for a CCW ring
      Rat d2 = detail::plane_distance_squared(n, dot(n, a), M);
      if (first || d2 < r2) r2 = d2;
      first = false;
    }
  } else {
    auto facets = hull_facets_3d(P);
    Rat vol6 = 0;
    std::vector<Rat> num(3, Rat(0));
    for (const auto& f : facets)
      for (const auto& tri : f.triangles) {
        Int v6 = dot(tri[0], cross3(tri[1], tri[2]));
        vol6 += Rat(v6);
        for (int c = 0; c < 3; ++c) num[c] += Rat(v6 * (tri[0][c] + tri[1][c] + tri[2][c]));
      }
    for (int c = 0; c < 3; ++c) M[c] = num[c] / (4 * vol6);
    bool first = true;
    for (const auto& f : facets) {
      Rat d2 = detail::plane_distance_squared(f.normal, f.offset, M);
      if (first || d2 < r2) r2 = d2;
      first = false;
    }
  }
  return InscribedBall{std::move(M), std::move(r2)};
}

/// One enumerated direction: primitive, canonical sign (first nonzero
/// coordinate positive), with its width over the polytope.
struct Candidate {
  LatticeVector dir;
  Int width;
  Int norm_sq;
};

struct CandidatePool {
  std::vector<Candidate> directions;
  Rat bound_squared;  // ((l-1) / 2R)^2
};

/// All primitive directions (one per sign pair) with ||v|| <= (l-1)/(2R),
/// i.e. every direction whose width over P could be at most l-1. The norm
/// test is the exact integer comparison 4*Rnum*||v||^2 <= (l-1)^2*Rden.
inline CandidatePool candidate_directions(const LatticePolytope& P, const Int& l,
                                          const InscribedBall& ball) {
  if (l < 1) throw std::invalid_argument("candidate_directions needs l >= 1");
  const int d = P.dim;
  const Int rnum = boost::multiprecision::numerator(ball.radius_squared);
  const Int rden = boost::multiprecision::denominator(ball.radius_squared);
  const Int lhs_scale = 4 * rnum;
  const Int rhs = (l - 1) * (l - 1) * rden;

  CandidatePool pool;
  pool.bound_squared = Rat(rhs) / Rat(lhs_scale);

  LatticeVector v(d, Int(0));
  // depth-first over coordinates; prefix of zeros forces the first nonzero
  // coordinate positive, so exactly one of each +-v pair is produced
  auto rec = [&](auto&& self, int i, const Int& partial_norm, bool prefix_zero) -> void {
    if (i == d) {
      if (prefix_zero) return;  // zero vector
      if (lhs_scale * partial_norm > rhs) return;
      if (content(v) != 1) return;
      pool.directions.push_back(Candidate{v, width(P, v), partial_norm});
      return;
    }
    Int slack = rhs - lhs_scale * partial_norm;
    if (slack < 0) return;
    Int limit = isqrt(slack / lhs_scale) + 1;  // leaf test is the exact one
    Int lo = prefix_zero ? Int(0) : -limit;
    for (Int c = lo; c <= limit; ++c) {
      v[i] = c;
      self(self, i + 1, partial_norm + c * c, prefix_zero && c == 0);
    }
    v[i] = 0;
  };
  rec(rec, 0, Int(0), true);
  return pool;
}

namespace detail {

// gcd of all k x k minors == 1, the exact condition for k rows to extend
// to a unimodular matrix.
inline bool spans_direct_summand(const std::vector<const LatticeVector*>& rows, int d) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  Int g = 0;
  while (true) {
    IntMatrix m(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = (*rows[i])[cols[j]];
    g = gcd_int(g, abs_int(det(m)));
    if (g == 1) return true;
    // next column combination
    int i = k - 1;
    while (i >= 0 && cols[i] == d - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return false;
}

}  // namespace detail

enum class SearchStatus { found, none, exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  IntMatrix rows;  // d pool directions with |det| = 1, widths ascending
  Int achieved;    // max row width
  std::int64_t examined = 0;
};

/// Finds d pool directions forming a unimodular matrix while minimizing the
/// largest row width. Pool entries wider than cap-1 are ignored. Subsets
/// are explored in order of their widest member, pruned by the
/// direct-summand test, so the first full matrix found is optimal. The
/// budget caps visited subsets; overrunning it is reported, not hidden.
inline SearchResult unimodular_search(const std::vector<Candidate>& pool_in, int d,
                                      const Int& cap, std::int64_t budget = 50'000'000) {
  std::vector<const Candidate*> pool;
  for (const auto& c : pool_in)
    if (c.width <= cap - 1) pool.push_back(&c);
  std::sort(pool.begin(), pool.end(), [](const Candidate* a, const Candidate* b) {
    if (a->width != b->width) return a->width < b->width;
    return a->dir < b->dir;
  });

  SearchResult res;
  const int n = static_cast<int>(pool.size());
  if (n < d) return res;

  std::vector<const LatticeVector*> chosen;
  chosen.reserve(d);
  auto dfs = [&](auto&& self, int start, int last) -> bool {
    if (++res.examined > budget) return false;
    if (static_cast<int>(chosen.size()) == d - 1) {
      chosen.push_back(&pool[last]->dir);
      bool ok = detail::spans_direct_summand(chosen, d);
      chosen.pop_back();
      return ok;
    }
    for (int i = start; i < last; ++i) {
      chosen.push_back(&pool[i]->dir);
      if (detail::spans_direct_summand(chosen, d) && self(self, i + 1, last)) return true;
      chosen.pop_back();
      if (res.examined > budget) return false;
    }
    return false;
  };

  for (int last = d - 1; last < n; ++last) {
    chosen.clear();
    if (dfs(dfs, 0, last)) {
      chosen.push_back(&pool[last]->dir);
      for (const auto* r : chosen) res.rows.push_back(*r);
      res.achieved = pool[last]->width;
      res.status = SearchStatus::found;
      return res;
    }
    if (res.examined > budget) {
      res.status = SearchStatus::exhausted;
      return res;
    }
  }
  return res;
}

struct OracleOptions {
  std::int64_t budget = 50'000'000;
};

struct OracleResult {
  SizeCertificate certificate;
  bool conclusive = true;
  std::int64_t examined = 0;
};

namespace detail {

inline OracleResult bruteforce_full_dim(const LatticePolytope& P, const OracleOptions& opt) {
  const int d = P.dim;
  auto ball = inscribed_ball(P);
  auto norm = normalize_translation(P);
  SizeCertificate cert{e_box(P), AffineUnimodularMap::translate(norm.shift),
                       coordinate_widths(P), 0};
  OracleResult out;
  while (true) {
    if (cert.value == 0) break;
    auto pool = candidate_directions(P, cert.value, ball);
    auto found = unimodular_search(pool.directions, d, cert.value, opt.budget - out.examined);
    out.examined += found.examined;
    if (found.status == SearchStatus::exhausted) {
      out.conclusive = false;
      break;
    }
    if (found.status == SearchStatus::none) break;
    auto A = AffineUnimodularMap::of(found.rows, LatticeVector(d, 0));
    auto img = normalize_translation(apply_map(P, A));
    cert.map = compose(AffineUnimodularMap::translate(img.shift), A);
    cert.value = found.achieved;
    cert.image_widths = coordinate_widths(img.polytope);
    ++cert.iterations;
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace detail

/// Exhaustive lattice size: tighten l from e_box(P) downward, each round
/// enumerating every direction that could appear as a row of a unimodular
/// matrix with all row widths <= l-1. Serves as the independent check for
/// the reduction algorithms.
inline OracleResult lattice_size_bruteforce(const LatticePolytope& P, const OracleOptions& opt = {}) {
  if (P.dim != 2 && P.dim != 3)
    throw std::invalid_argument("lattice_size_bruteforce supports dimensions 2 and 3");
  if (auto red = reduce_dimension(P)) {
    if (red->rank <= 1) return OracleResult{detail::degenerate_certificate(P, *red), true, 0};
    // flat in 3D: brute-force the flattened polygon, then re-embed
    auto flat = detail::bruteforce_full_dim(red->reduced, opt);
    IntMatrix ext = {{flat.certificate.map.matrix[0][0], flat.certificate.map.matrix[0][1], 0},
                     {flat.certificate.map.matrix[1][0], flat.certificate.map.matrix[1][1], 0},
                     {0, 0, 1}};
    LatticeVector tr{flat.certificate.map.translation[0], flat.certificate.map.translation[1], 0};
    auto map = compose(AffineUnimodularMap::of(std::move(ext), std::move(tr)), red->embedding);
    auto norm = normalize_translation(apply_map(P, map));
    map = compose(AffineUnimodularMap::translate(norm.shift), map);
    return OracleResult{SizeCertificate{flat.certificate.value, std::move(map),
                                        coordinate_widths(norm.polytope),
                                        flat.certificate.iterations},
                        flat.conclusive, flat.examined};
  }
  return detail::bruteforce_full_dim(P, opt);
}

/// Exact lattice width by enumeration under the self-tightening ball bound.
inline Int width_bruteforce(const LatticePolytope& P) {
  if (P.dim != 2 && P.dim != 3)
    throw std::invalid_argument("width_bruteforce supports dimensions 2 and 3");
  if (reduce_dimension(P)) return 0;
  auto cw = coordinate_widths(P);
  Int best = *std::min_element(cw.begin(), cw.end());
  if (best == 0) return 0;
  auto ball = inscribed_ball(P);
  auto pool = candidate_directions(P, best, ball);
  std::sort(pool.directions.begin(), pool.directions.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
              return a.dir < b.dir;
            });
  const Int rnum = boost::multiprecision::numerator(ball.radius_squared);
  const Int rden = boost::multiprecision::denominator(ball.radius_squared);
  for (const auto& c : pool.directions) {
    // only vectors with 2*||v||*R <= best-1 can still improve
    if (4 * rnum * c.norm_sq > (best - 1) * (best - 1) * rden) break;
    if (c.width < best) best = c.width;
  }
  return best;
}

/// Exact minimum, over all unimodular images, of the middle sorted
/// coordinate width: the smallest k with a unimodular copy of P inside
/// [0,k] x [0,k] x R. Scans direction pairs that extend to a unimodular
/// matrix, in order of the wider member.
inline Int w2_bruteforce(const LatticePolytope& P) {
  if (P.dim != 3) throw std::invalid_argument("w2_bruteforce expects dimension 3");
  if (auto red = reduce_dimension(P)) {
    if (red->rank <= 1) return 0;
    return width_bruteforce(red->reduced);
  }
  auto cw = coordinate_widths(P);
  std::sort(cw.begin(), cw.end());
  Int best = cw[1];
  if (best == 0) return 0;
  auto ball = inscribed_ball(P);
  auto pool = candidate_directions(P, best, ball);
  std::vector<const Candidate*> narrow;
  for (const auto& c : pool.directions)
    if (c.width <= best - 1) narrow.push_back(&c);
  std::sort(narrow.begin(), narrow.end(), [](const Candidate* a, const Candidate* b) {
    if (a->width != b->width) return a->width < b->width;
    return a->dir < b->dir;
  });
  for (std::size_t j = 0; j < narrow.size(); ++j) {
    if (narrow[j]->width >= best) break;
    for (std::size_t i = 0; i < j; ++i) {
      std::vector<const LatticeVector*> rows{&narrow[i]->dir, &narrow[j]->dir};
      if (detail::spans_direct_summand(rows, 3)) return narrow[j]->width;
    }
  }
  return best;
}

}  // namespace cubesize
