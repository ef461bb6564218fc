#pragma once

// Exact computation of cube-type lattice invariants for lattice polygons
// and 3D lattice polytopes: lattice size, lattice width, the middle box
// invariant, and componentwise-minimal bounding boxes, each with a
// certifying affine unimodular map.

#include "cubesize/analyze.hpp"
#include "cubesize/core.hpp"
#include "cubesize/dimension.hpp"
#include "cubesize/generic.hpp"
#include "cubesize/hull.hpp"
#include "cubesize/integers.hpp"
#include "cubesize/io.hpp"
#include "cubesize/random_gen.hpp"
#include "cubesize/reduce2d.hpp"
#include "cubesize/reduce3d.hpp"
#include "cubesize/unimodular.hpp"
