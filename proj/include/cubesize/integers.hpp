#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace cubesize {

// All geometry in this library is exact: arbitrary-precision integers for
// lattice data, rationals only where centroids/radii appear. No floating
// point is used anywhere in a computation that feeds a result.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

/// gcd of the absolute values of all entries (0 for an empty or zero vector).
inline Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, abs_int(x));
  return g;
}

}  // namespace cubesize
