#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepsym/colorset.hpp"
#include "sepsym/geometry.hpp"

namespace sepsym {

// Generators xi_i = (x_i, y_i) of a planar zonogon Z(n,2), with exact
// coordinates. Index 0 of `generators` is color 1.
struct ZonogonConfig {
  int n = 0;
  std::vector<Point2> generators;
  bool symmetric = false;

  const Point2& xi(int color) const { return generators.at(static_cast<std::size_t>(color - 1)); }

  // Height of the middle line, y_1 + ... + y_{n/2}; only for symmetric even n.
  Rational middle_height() const;
  bool has_middle_line() const { return symmetric && n % 2 == 0; }

  // Sum of all generators halved: the center of symmetry of Z.
  Point2 center() const;
  Rational area() const;

  // First violated axiom, or nullopt: increasing x, heights 1 - delta with
  // 0 <= delta <= 1/4 (delta = 0 only on a vertical generator), strict
  // concavity, pairwise distinct xi_i and xi_j - xi_i, and mirror symmetry in
  // symmetric mode.
  std::optional<std::string> check() const;
};

// x_i = 2i - n - 1, y_i = 1 - x_i^2 / (4 (n+1)^2). These generators are always
// mirror symmetric; `symmetric` only records whether callers rely on it.
ZonogonConfig make_zonogon_config(int n, bool symmetric);

// Point of Z identified with the set A: the sum of xi_i over i in A.
Point2 embed(const ColorSet& a, const ZonogonConfig& cfg);

// Left boundary [0],[1],...,[n] and right boundary [n+1-i..n] of Z.
std::vector<ColorSet> left_boundary(int n);
std::vector<ColorSet> right_boundary(int n);

}  // namespace sepsym
