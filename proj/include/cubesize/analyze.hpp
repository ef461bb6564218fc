#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubesize/core.hpp"
#include "cubesize/dimension.hpp"
#include "cubesize/generic.hpp"
#include "cubesize/reduce2d.hpp"
#include "cubesize/reduce3d.hpp"

namespace cubesize {

/// Everything the front end reports for one polytope: the cube size with
/// its certificate, the lattice width, the middle box invariant in 3D, and
/// the map into the componentwise-minimal box.
struct Analysis {
  int dim = 0;
  Int ls;
  Int w;
  std::optional<Int> w2;            // dimension 3 only
  SizeCertificate size;             // image in [0,ls]^d
  AffineUnimodularMap box_map;      // image in the minimal box
  std::vector<Int> box_shape;       // (w, ls) or (w, w2, ls)
};

inline Analysis analyze(const LatticePolytope& P, const Reduce3DOptions& opts = {}) {
  Analysis a;
  a.dim = P.dim;
  if (P.dim == 2) {
    a.size = lattice_size_2d(P);
    auto rect = minimal_rectangle_2d(P);
    a.ls = a.size.value;
    a.w = rect.w;
    a.box_shape = {rect.w, rect.ls};
    a.box_map = std::move(rect.map);
  } else if (P.dim == 3) {
    a.size = lattice_size_3d(P, opts);
    auto box = minimal_box_3d(P, opts);
    a.ls = a.size.value;
    a.w = box.w;
    a.w2 = box.w2;
    a.box_shape = {box.w, box.w2, box.ls};
    a.box_map = std::move(box.map);
  } else {
    throw std::invalid_argument("analyze supports dimensions 2 and 3");
  }
  return a;
}

struct OracleCheck {
  Int ls;
  Int w;
  std::optional<Int> w2;
  bool conclusive = true;
};

/// Independent enumeration-based values for cross-checking an Analysis.
inline OracleCheck oracle_check(const LatticePolytope& P, const OracleOptions& opt = {}) {
  OracleCheck c;
  auto ls = lattice_size_bruteforce(P, opt);
  c.ls = ls.certificate.value;
  c.conclusive = ls.conclusive;
  if (affine_rank(P) < P.dim) {
    c.w = 0;
    if (P.dim == 3) c.w2 = w2_bruteforce(P);
  } else {
    c.w = width_bruteforce(P);
    if (P.dim == 3) c.w2 = w2_bruteforce(P);
  }
  return c;
}

}  // namespace cubesize
