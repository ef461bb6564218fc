#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubesize/core.hpp"
#include "cubesize/dimension.hpp"
#include "cubesize/unimodular.hpp"

namespace cubesize {

/// State of the plane shear-reduction loop. The polygon is kept
/// translation-normalized; accumulated_map sends the original input to it.
struct Reduction2DState {
  LatticePolytope polygon;
  AffineUnimodularMap accumulated_map;
  Int dx, dy, dpp, dmm;  // widths along (1,0), (0,1), (1,1), (1,-1)
};

namespace detail {

struct ShearChoice {
  int index;   // into the candidate list below
  Int w0, w1;  // coordinate widths of the chosen image
};

// Candidate row pairs, in tie-break order:
//   [[1,0],[1,1]], [[1,0],[1,-1]], [[0,1],[1,1]], [[0,1],[1,-1]]
// Image coordinate widths are (dx,dpp), (dx,dmm), (dy,dpp), (dy,dmm).
// Terminal when min(dpp,dmm) >= max(dx,dy); otherwise the choice minimizing
// (max width, width sum) lexicographically strictly decreases that pair.
inline std::optional<ShearChoice> choose_projection_shear(const Int& dx, const Int& dy,
                                                          const Int& dpp, const Int& dmm) {
  Int maxxy = dx > dy ? dx : dy;
  Int mindiag = dpp < dmm ? dpp : dmm;
  if (mindiag >= maxxy) return std::nullopt;
  const std::array<std::pair<const Int*, const Int*>, 4> cand = {
      {{&dx, &dpp}, {&dx, &dmm}, {&dy, &dpp}, {&dy, &dmm}}};
  int best = -1;
  Int best_max, best_sum;
  for (int i = 0; i < 4; ++i) {
    const Int& w0 = *cand[i].first;
    const Int& w1 = *cand[i].second;
    Int m = w0 > w1 ? w0 : w1;
    Int s = w0 + w1;
    if (best < 0 || m < best_max || (m == best_max && s < best_sum)) {
      best = i;
      best_max = m;
      best_sum = s;
    }
  }
  return ShearChoice{best, *cand[best].first, *cand[best].second};
}

// The chosen candidate embedded into dimension d, acting on axes 0 and 1.
inline AffineUnimodularMap projection_shear_matrix(int d, int index) {
  static const int rows[4][2][2] = {{{1, 0}, {1, 1}},
                                    {{1, 0}, {1, -1}},
                                    {{0, 1}, {1, 1}},
                                    {{0, 1}, {1, -1}}};
  IntMatrix m(d, std::vector<Int>(d, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = rows[index][i][j];
  for (int i = 2; i < d; ++i) m[i][i] = 1;
  return AffineUnimodularMap{std::move(m), LatticeVector(d, 0)};
}

}  // namespace detail

inline Reduction2DState make_reduction_state(const LatticePolytope& P) {
  auto norm = normalize_translation(P);
  Reduction2DState s{norm.polytope, AffineUnimodularMap::translate(norm.shift), 0, 0, 0, 0};
  s.dx = width(s.polygon, LatticeVector{1, 0});
  s.dy = width(s.polygon, LatticeVector{0, 1});
  s.dpp = width(s.polygon, LatticeVector{1, 1});
  s.dmm = width(s.polygon, LatticeVector{1, -1});
  return s;
}

/// One shear of the reduction loop, or nullopt at the terminal state
/// min(D(x+y), D(x-y)) >= max(D(x), D(y)). Expects a nondegenerate polygon;
/// lower-dimensional inputs belong to reduce_dimension.
inline std::optional<Reduction2DState> shear_step(const Reduction2DState& s) {
  auto choice = detail::choose_projection_shear(s.dx, s.dy, s.dpp, s.dmm);
  if (!choice) return std::nullopt;
  auto A = detail::projection_shear_matrix(2, choice->index);
  auto norm = normalize_translation(apply_map(s.polygon, A));
  auto acc = compose(AffineUnimodularMap::translate(norm.shift), compose(A, s.accumulated_map));
  Reduction2DState next{std::move(norm.polytope), std::move(acc), choice->w0, choice->w1, 0, 0};
  next.dpp = width(next.polygon, LatticeVector{1, 1});
  next.dmm = width(next.polygon, LatticeVector{1, -1});
  return next;
}

struct Terminal2D {
  Reduction2DState state;
  std::int64_t steps = 0;
  // (e_box, D(x)+D(y)) after each state, for checking strict descent
  std::vector<std::pair<Int, Int>> potential_trace;
};

/// Runs the shear loop to its terminal state. Pre: P is full-dimensional.
inline Terminal2D reduce_to_terminal_2d(const LatticePolytope& P) {
  Terminal2D t{make_reduction_state(P), 0, {}};
  auto record = [&t] {
    const auto& s = t.state;
    t.potential_trace.emplace_back(s.dx > s.dy ? s.dx : s.dy, s.dx + s.dy);
  };
  record();
  while (auto next = shear_step(t.state)) {
    t.state = std::move(*next);
    ++t.steps;
    record();
  }
  return t;
}

namespace detail {

// Degenerate inputs: rank 0 collapses to the origin, rank 1 to a segment
// [0,g] on the first axis; the flattening map is the whole certificate.
inline SizeCertificate degenerate_certificate(const LatticePolytope& P,
                                              const DimensionReduction& red) {
  auto norm = normalize_translation(apply_map(P, red.embedding));
  auto map = compose(AffineUnimodularMap::translate(norm.shift), red.embedding);
  auto widths = coordinate_widths(norm.polytope);
  Int value = *std::max_element(widths.begin(), widths.end());
  return SizeCertificate{std::move(value), std::move(map), std::move(widths), 0};
}

}  // namespace detail

/// Smallest l such that a unimodular image of the polygon fits in [0,l]^2,
/// with the realizing map. Runs the shear loop; at the terminal state the
/// larger coordinate width cannot be improved by any unimodular map.
inline SizeCertificate lattice_size_2d(const LatticePolytope& P) {
  if (P.dim != 2) throw std::invalid_argument("lattice_size_2d expects dimension 2");
  if (auto red = reduce_dimension(P)) return detail::degenerate_certificate(P, *red);
  auto t = reduce_to_terminal_2d(P);
  auto widths = coordinate_widths(t.state.polygon);
  Int value = widths[0] > widths[1] ? widths[0] : widths[1];
  return SizeCertificate{std::move(value), t.state.accumulated_map, std::move(widths), t.steps};
}

/// Lattice width of a polygon: the minimum width over all primitive
/// directions, read off the terminal state as min(D(x), D(y)).
inline Int width_2d(const LatticePolytope& P) {
  if (P.dim != 2) throw std::invalid_argument("width_2d expects dimension 2");
  if (reduce_dimension(P)) return 0;  // some direction already has width 0
  auto t = reduce_to_terminal_2d(P);
  return t.state.dx < t.state.dy ? t.state.dx : t.state.dy;
}

struct MinimalRectangle {
  Int w;   // narrow side
  Int ls;  // wide side
  AffineUnimodularMap map;
};

/// Map placing the polygon inside [0,w]x[0,ls]; the pair is the
/// componentwise minimum over all axis-parallel boxes holding a unimodular
/// copy.
inline MinimalRectangle minimal_rectangle_2d(const LatticePolytope& P) {
  if (P.dim != 2) throw std::invalid_argument("minimal_rectangle_2d expects dimension 2");
  if (auto red = reduce_dimension(P)) {
    // rank 1 lands on the first axis; swap so the extent sits on y
    auto swap01 = AffineUnimodularMap::permutation({1, 0});
    auto norm = normalize_translation(apply_map(P, compose(swap01, red->embedding)));
    auto map = compose(AffineUnimodularMap::translate(norm.shift), compose(swap01, red->embedding));
    auto cw = coordinate_widths(norm.polytope);
    return MinimalRectangle{cw[0], cw[1], std::move(map)};
  }
  auto t = reduce_to_terminal_2d(P);
  auto map = t.state.accumulated_map;
  Int w = t.state.dx, ls = t.state.dy;
  if (w > ls) {
    std::swap(w, ls);
    auto swap01 = AffineUnimodularMap::permutation({1, 0});
    auto norm = normalize_translation(apply_map(t.state.polygon, swap01));
    map = compose(AffineUnimodularMap::translate(norm.shift), compose(swap01, map));
  }
  return MinimalRectangle{std::move(w), std::move(ls), std::move(map)};
}

}  // namespace cubesize
