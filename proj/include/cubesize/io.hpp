#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubesize/core.hpp"

namespace cubesize {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace detail {

inline bool looks_like_integer(const std::string& tok) {
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') return false;
  return true;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

/// Text format: a header line "d n", then n lines of d integers each.
/// Blank lines are ignored; anything else is a ParseError with its line
/// number. Duplicate points are allowed.
inline LatticePolytope parse_polytope(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_tokens = [&](bool required) -> std::vector<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = detail::tokens_of(line);
      if (!toks.empty()) return toks;
    }
    if (required) throw ParseError(lineno + 1, "unexpected end of input");
    return {};
  };

  auto header = next_tokens(true);
  if (header.size() != 2 || !detail::looks_like_integer(header[0]) ||
      !detail::looks_like_integer(header[1]))
    throw ParseError(lineno, "expected header \"d n\"");
  long d = std::stol(header[0]);
  long n = std::stol(header[1]);
  if (d < 1) throw ParseError(lineno, "dimension must be >= 1");
  if (n < 1) throw ParseError(lineno, "need at least one point");

  std::vector<LatticeVector> pts;
  pts.reserve(n);
  for (long r = 0; r < n; ++r) {
    auto toks = next_tokens(true);
    if (toks.size() != static_cast<std::size_t>(d))
      throw ParseError(lineno, "expected " + std::to_string(d) + " coordinates, got " +
                                   std::to_string(toks.size()));
    LatticeVector p;
    p.reserve(d);
    for (const auto& t : toks) {
      if (!detail::looks_like_integer(t)) throw ParseError(lineno, "not an integer: " + t);
      p.emplace_back(t);
    }
    pts.push_back(std::move(p));
  }
  auto trailing = next_tokens(false);
  if (!trailing.empty()) throw ParseError(lineno, "unexpected trailing content");
  return LatticePolytope(std::move(pts), static_cast<int>(d));
}

inline LatticePolytope load_polytope(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_polytope(f);
}

}  // namespace cubesize
