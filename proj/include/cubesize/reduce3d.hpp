#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubesize/core.hpp"
#include "cubesize/dimension.hpp"
#include "cubesize/reduce2d.hpp"
#include "cubesize/unimodular.hpp"

namespace cubesize {

/// The finite set of pairs (a,b) for which the width along (a,b,1) could
/// still drop below the top coordinate width l, given sorted coordinate
/// widths l1 <= l2 <= l and a normalized plane projection. Membership is
/// decided by exact integer inequalities:
///   |a| >= |b|  =>  |b|*l2 <= 2l-1  and  |a|*l1 <= 2l-1 + |b|*l2
///   |b| >= |a|  =>  |a|*l1 <= 2l-1  and  |b|*l2 <= 2l-1 + |a|*l1
struct DirectionSet {
  std::vector<std::pair<Int, Int>> pairs;  // lexicographically ordered
  Int l1, l2, l;                           // the bounds it was built from
};

inline DirectionSet build_S(const Int& l1, const Int& l2, const Int& l) {
  if (l1 < 1 || l1 > l2 || l2 > l)
    throw std::invalid_argument("build_S needs 1 <= l1 <= l2 <= l (reduce dimension first)");
  DirectionSet S{{}, l1, l2, l};
  const Int cap = 2 * l - 1;
  // members satisfy |a| < 4l/l1 and |b| < 4l/l2
  const Int amax = (4 * l) / l1;
  const Int bmax = (4 * l) / l2;
  for (Int a = -amax; a <= amax; ++a) {
    const Int aa = abs_int(a);
    for (Int b = -bmax; b <= bmax; ++b) {
      const Int bb = abs_int(b);
      if (aa >= bb && !(bb * l2 <= cap && aa * l1 <= cap + bb * l2)) continue;
      if (bb >= aa && !(aa * l1 <= cap && bb * l2 <= cap + aa * l1)) continue;
      S.pairs.emplace_back(a, b);
    }
  }
  return S;
}

/// Sign representatives of the directions (a,b,c), |a|=|b|=1, |c|=2: the
/// only non-axis directions whose width may still be small at a terminal
/// state of the reduction.
inline const std::array<LatticeVector, 4>& exceptional_directions() {
  static const std::array<LatticeVector, 4> dirs = {{{Int(1), Int(1), Int(2)},
                                                     {Int(1), Int(-1), Int(2)},
                                                     {Int(-1), Int(1), Int(2)},
                                                     {Int(-1), Int(-1), Int(2)}}};
  return dirs;
}

struct ScanResult {
  Int m, n;    // minimizing pair, ties resolved lexicographically
  Int lprime;  // min width over directions (a,b,1), (a,b) in S
};

inline ScanResult scan_S(const LatticePolytope& P3, const DirectionSet& S) {
  ScanResult best{0, 0, Int(-1)};
  LatticeVector dir(3);
  dir[2] = 1;
  for (const auto& [a, b] : S.pairs) {
    dir[0] = a;
    dir[1] = b;
    Int w = width(P3, dir);
    if (best.lprime < 0 || w < best.lprime) best = ScanResult{a, b, std::move(w)};
  }
  return best;
}

struct Reduce3DOptions {
  // When the scanned minimum l' lands in [l2, l), one more shear already
  // certifies the answer; turning this off forces the plain loop instead
  // (used for differential testing).
  bool refined_early_exit = true;
};

struct Reduce3DStats {
  std::int64_t plane_shears = 0;  // shears acting on the first two axes
  std::int64_t z_shears = 0;      // shears with row (m,n,1)
  std::int64_t scans = 0;
  std::vector<std::size_t> scan_sizes;
  std::vector<Int> potential_trace;  // l1+l2+l after every shear
};

struct Terminal3D {
  LatticePolytope polytope;  // normalized: sorted widths, reduced projection
  AffineUnimodularMap accumulated;
  Int l1, l2, l;
  Reduce3DStats stats;
};

namespace detail {

inline void record_potential(Reduce3DStats& stats, const LatticePolytope& Q) {
  auto w = coordinate_widths(Q);
  stats.potential_trace.push_back(w[0] + w[1] + w[2]);
}

// Shear the first two axes until min(D(x+y), D(x-y)) >= max(D(x), D(y)),
// then restore D(x) <= D(y). Leaves the third coordinate untouched.
inline void normalize_projection_inplace(LatticePolytope& Q, AffineUnimodularMap& T,
                                         Reduce3DStats& stats) {
  const LatticeVector ex{1, 0, 0}, ey{0, 1, 0}, epp{1, 1, 0}, emm{1, -1, 0};
  while (true) {
    auto choice = detail::choose_projection_shear(width(Q, ex), width(Q, ey), width(Q, epp),
                                                  width(Q, emm));
    if (!choice) break;
    auto A = detail::projection_shear_matrix(3, choice->index);
    auto norm = normalize_translation(apply_map(Q, A));
    Q = std::move(norm.polytope);
    T = compose(AffineUnimodularMap::translate(norm.shift), compose(A, T));
    ++stats.plane_shears;
    record_potential(stats, Q);
  }
  if (width(Q, ex) > width(Q, ey)) {
    auto swap01 = AffineUnimodularMap::permutation({1, 0, 2});
    Q = apply_map(Q, swap01);
    T = compose(swap01, T);
  }
}

inline void sort_coordinates_inplace(LatticePolytope& Q, AffineUnimodularMap& T) {
  auto prof = width_profile(Q);
  if (prof.perm == AffineUnimodularMap::identity(Q.dim)) return;
  Q = apply_map(Q, prof.perm);
  T = compose(prof.perm, T);
}

}  // namespace detail

/// Fresh reduction state: translation-normalized and coordinate-sorted.
inline Terminal3D make_state_3d(const LatticePolytope& P) {
  if (P.dim != 3) throw std::invalid_argument("make_state_3d expects dimension 3");
  auto norm = normalize_translation(P);
  Terminal3D t{std::move(norm.polytope), AffineUnimodularMap::translate(norm.shift), 0, 0, 0, {}};
  detail::sort_coordinates_inplace(t.polytope, t.accumulated);
  auto w = coordinate_widths(t.polytope);
  t.l1 = w[0];
  t.l2 = w[1];
  t.l = w[2];
  return t;
}

/// Applies the 2D shear logic to the (x,y)-projection of a sorted state and
/// re-sorts the first two coordinates. The z column is never touched.
inline Terminal3D normalize_projection(Terminal3D state) {
  detail::normalize_projection_inplace(state.polytope, state.accumulated, state.stats);
  auto w = coordinate_widths(state.polytope);
  state.l1 = w[0];
  state.l2 = w[1];
  state.l = w[2];
  return state;
}

/// The full 3D reduction loop: sort coordinates, normalize the projection,
/// scan S, and either stop or shear (m,n,1) and repeat. Terminates because
/// l1+l2+l drops on every shear. Pre: P is full-dimensional.
inline Terminal3D reduce_to_terminal_3d(const LatticePolytope& P,
                                        const Reduce3DOptions& opts = {}) {
  auto norm = normalize_translation(P);
  Terminal3D t{std::move(norm.polytope), AffineUnimodularMap::translate(norm.shift), 0, 0, 0, {}};
  detail::record_potential(t.stats, t.polytope);
  while (true) {
    detail::sort_coordinates_inplace(t.polytope, t.accumulated);
    detail::normalize_projection_inplace(t.polytope, t.accumulated, t.stats);
    auto w = coordinate_widths(t.polytope);
    t.l1 = w[0];
    t.l2 = w[1];
    t.l = w[2];
    auto S = build_S(t.l1, t.l2, t.l);
    ++t.stats.scans;
    t.stats.scan_sizes.push_back(S.pairs.size());
    auto scan = scan_S(t.polytope, S);
    if (scan.lprime >= t.l) break;  // no direction can beat l: done
    IntMatrix rows = {{1, 0, 0}, {0, 1, 0}, {scan.m, scan.n, 1}};
    auto A = AffineUnimodularMap::of(std::move(rows), LatticeVector(3, 0));
    auto sheared = normalize_translation(apply_map(t.polytope, A));
    t.polytope = std::move(sheared.polytope);
    t.accumulated =
        compose(AffineUnimodularMap::translate(sheared.shift), compose(A, t.accumulated));
    ++t.stats.z_shears;
    detail::record_potential(t.stats, t.polytope);
    if (opts.refined_early_exit && scan.lprime >= t.l2) {
      // One scan of S already bounds every remaining direction by l', so
      // the sheared state is final. Re-establish the sorted, normalized
      // shape before reading anything off it (it is a no-op here).
      detail::sort_coordinates_inplace(t.polytope, t.accumulated);
      detail::normalize_projection_inplace(t.polytope, t.accumulated, t.stats);
      auto w2 = coordinate_widths(t.polytope);
      t.l1 = w2[0];
      t.l2 = w2[1];
      t.l = w2[2];
      break;
    }
  }
  return t;
}

/// Smallest l such that a unimodular image of P fits in [0,l]^3.
/// Lower-dimensional inputs fall through to the 2D algorithm.
inline SizeCertificate lattice_size_3d(const LatticePolytope& P, const Reduce3DOptions& opts = {}) {
  if (P.dim != 3) throw std::invalid_argument("lattice_size_3d expects dimension 3");
  if (auto red = reduce_dimension(P)) {
    if (red->rank <= 1) return detail::degenerate_certificate(P, *red);
    auto flat = lattice_size_2d(red->reduced);
    IntMatrix ext = {{flat.map.matrix[0][0], flat.map.matrix[0][1], 0},
                     {flat.map.matrix[1][0], flat.map.matrix[1][1], 0},
                     {0, 0, 1}};
    LatticeVector tr{flat.map.translation[0], flat.map.translation[1], 0};
    auto map = compose(AffineUnimodularMap::of(std::move(ext), std::move(tr)), red->embedding);
    auto norm = normalize_translation(apply_map(P, map));
    map = compose(AffineUnimodularMap::translate(norm.shift), map);
    auto widths = coordinate_widths(norm.polytope);
    return SizeCertificate{flat.value, std::move(map), std::move(widths), flat.iterations};
  }
  auto t = reduce_to_terminal_3d(P, opts);
  auto widths = coordinate_widths(t.polytope);
  return SizeCertificate{t.l, t.accumulated, std::move(widths),
                         t.stats.plane_shears + t.stats.z_shears};
}

namespace detail {

// Minimum width over the exceptional directions at a terminal state,
// together with the first direction attaining it.
inline std::pair<Int, LatticeVector> exceptional_minimum(const LatticePolytope& terminal) {
  Int best = -1;
  LatticeVector arg;
  for (const auto& e : exceptional_directions()) {
    Int w = width(terminal, e);
    if (best < 0 || w < best) {
      best = w;
      arg = e;
    }
  }
  return {best, arg};
}

}  // namespace detail

/// Lattice width of a full-dimensional 3D polytope: at the terminal state
/// only the first axis and the exceptional directions can still be narrow.
inline Int width_3d(const LatticePolytope& P, const Reduce3DOptions& opts = {}) {
  if (P.dim != 3) throw std::invalid_argument("width_3d expects dimension 3");
  if (reduce_dimension(P)) return 0;  // flat along some direction
  auto t = reduce_to_terminal_3d(P, opts);
  auto [m, arg] = detail::exceptional_minimum(t.polytope);
  return m < t.l1 ? m : t.l1;
}

/// Smallest k such that a unimodular image of P fits in [0,k]x[0,k]xR.
/// With m = exceptional minimum at the terminal state this is
/// min(l2, max(l1, m)): at most one exceptional direction can be narrow,
/// so one of them can replace at most one of the first two axes.
inline Int w2_3d(const LatticePolytope& P, const Reduce3DOptions& opts = {}) {
  if (P.dim != 3) throw std::invalid_argument("w2_3d expects dimension 3");
  if (auto red = reduce_dimension(P)) {
    if (red->rank <= 1) return 0;
    return width_2d(red->reduced);  // flat: one free axis plus the plane width
  }
  auto t = reduce_to_terminal_3d(P, opts);
  auto [m, arg] = detail::exceptional_minimum(t.polytope);
  Int inner = m > t.l1 ? m : t.l1;
  return inner < t.l2 ? inner : t.l2;
}

struct MinimalBox {
  Int w, w2, ls;
  AffineUnimodularMap map;  // image lies in [0,w] x [0,w2] x [0,ls]
};

/// Map realizing the componentwise-minimal box (w, w2, ls).
inline MinimalBox minimal_box_3d(const LatticePolytope& P, const Reduce3DOptions& opts = {}) {
  if (P.dim != 3) throw std::invalid_argument("minimal_box_3d expects dimension 3");
  if (auto red = reduce_dimension(P)) {
    if (red->rank <= 1) {
      // extent (if any) goes to the last axis
      auto perm = AffineUnimodularMap::permutation({1, 2, 0});
      auto map = compose(perm, red->embedding);
      auto norm = normalize_translation(apply_map(P, map));
      map = compose(AffineUnimodularMap::translate(norm.shift), map);
      auto cw = coordinate_widths(norm.polytope);
      return MinimalBox{cw[0], cw[1], cw[2], std::move(map)};
    }
    auto rect = minimal_rectangle_2d(red->reduced);
    IntMatrix ext = {{rect.map.matrix[0][0], rect.map.matrix[0][1], 0},
                     {rect.map.matrix[1][0], rect.map.matrix[1][1], 0},
                     {0, 0, 1}};
    LatticeVector tr{rect.map.translation[0], rect.map.translation[1], 0};
    auto perm = AffineUnimodularMap::permutation({2, 0, 1});  // (w,ls,0) -> (0,w,ls)
    auto map = compose(perm, compose(AffineUnimodularMap::of(std::move(ext), std::move(tr)),
                                     red->embedding));
    auto norm = normalize_translation(apply_map(P, map));
    map = compose(AffineUnimodularMap::translate(norm.shift), map);
    auto cw = coordinate_widths(norm.polytope);
    return MinimalBox{cw[0], cw[1], cw[2], std::move(map)};
  }
  auto t = reduce_to_terminal_3d(P, opts);
  auto [m, arg] = detail::exceptional_minimum(t.polytope);
  AffineUnimodularMap map = t.accumulated;
  if (m < t.l2) {
    IntMatrix rows;
    if (m >= t.l1) {
      rows = {{1, 0, 0}, {arg[0], arg[1], arg[2]}, {0, 0, 1}};
    } else {
      rows = {{arg[0], arg[1], arg[2]}, {1, 0, 0}, {0, 0, 1}};
    }
    auto A = AffineUnimodularMap::of(std::move(rows), LatticeVector(3, 0));
    auto norm = normalize_translation(apply_map(t.polytope, A));
    map = compose(AffineUnimodularMap::translate(norm.shift), compose(A, map));
    auto cw = coordinate_widths(norm.polytope);
    return MinimalBox{cw[0], cw[1], cw[2], std::move(map)};
  }
  return MinimalBox{t.l1, t.l2, t.l, std::move(map)};
}

}  // namespace cubesize
