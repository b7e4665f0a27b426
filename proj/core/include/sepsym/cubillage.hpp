#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sepsym/combi.hpp"
#include "sepsym/colorset.hpp"
#include "sepsym/geometry.hpp"
#include "sepsym/zonogon.hpp"

namespace sepsym {

// Generators theta_i = (t_i, 1, t_i^2) of the cyclic zonotope Z(n,3), with
// coordinates (a, b, c) = (left-to-right, height, depth).
struct ZonotopeConfig {
  int n = 0;
  std::vector<Point3> generators;
  bool symmetric = false;
  Rational rho;

  const Point3& theta(int color) const { return generators.at(static_cast<std::size_t>(color - 1)); }
  Rational t(int color) const { return theta(color).a; }
  Point3 center() const;
  Rational depth_sum() const;  // sum of phi(t_i)
};

// t_i = 2i - n - 1, phi(t) = t^2, rho = 1 / (1 + 4 * sum phi(t_i)).
ZonotopeConfig make_zonotope_config(int n, bool symmetric);
std::optional<std::string> check_zonotope_config(const ZonotopeConfig& cfg);

Point3 embed3(const ColorSet& a, const ZonotopeConfig& cfg);

// (a, b, c) -> (a, b - rho c).
Point2 project_pi_rho(const Point3& p, const ZonotopeConfig& cfg);
// The zonogon spanned by the projected generators.
ZonogonConfig projected_zonogon(const ZonotopeConfig& cfg);

// Projection along d = (t, 1, t^2): (a, b, c) -> (a - t b, c - t^2 b).
Point2 project_along(const Point3& p, const Rational& t);
// Parameter t of a new color inserted at position p (1..n+1) between the
// existing ones: the midpoint of its neighbours, or one step past an end.
Rational insertion_parameter(const ZonotopeConfig& cfg, int position);

struct Cube {
  ColorSet base;
  std::array<int, 3> type{};

  std::vector<ColorSet> vertices() const;
  ColorSet top() const;
  friend bool operator==(const Cube&, const Cube&) = default;
  bool operator<(const Cube& o) const;
};

struct Facet {
  ColorSet base;
  int a = 0;
  int b = 0;

  std::array<ColorSet, 4> vertices() const;  // Y, Ya, Yb, Yab
  friend bool operator==(const Facet&, const Facet&) = default;
  bool operator<(const Facet& o) const;
};

std::string to_string(const Cube& c);
std::string to_string(const Facet& f);

// The six facets of a cube together with the side of each facet's plane on
// which the cube lies (+1 or -1, relative to the normal theta_a x theta_b).
std::vector<std::pair<Facet, int>> cube_facets(const Cube& c, const ZonotopeConfig& cfg);

struct Cubillage {
  ZonotopeConfig config;
  std::vector<Cube> cubes;
  bool symmetric = false;
};

// front = ([a+1..b-1] | ab), rear = ([n] - [a..b] | ab).
std::pair<std::vector<Facet>, std::vector<Facet>> boundary_sides(int n);
// Side of the facet plane holding the zonotope center.
int inner_side(const Facet& f, const ZonotopeConfig& cfg);
// Depth component of the outward normal of a boundary facet.
int outward_depth_sign(const Facet& f, const ZonotopeConfig& cfg);

std::optional<Diagnostic> validate_cubillage(const Cubillage& q);

std::vector<ColorSet> spectrum(const Cubillage& q);

// mu(X|T) = ((X u T)* | T°).
Cube mu(const Cube& c);
// mu(Y|ab) = ((Y u ab)* | b°a°).
Facet mu(const Facet& f);
bool is_symmetric_cubillage(const Cubillage& q);

struct Involutions {
  Point3 omega;  // central symmetry through the center of Z
  Point3 nu;     // mirror a -> -a
  Point3 mu;     // omega after nu
};

Involutions geometric_involutions(const Point3& p, const ZonotopeConfig& cfg);
// Images of the point of A.
Involutions geometric_involutions(const ColorSet& a, const ZonotopeConfig& cfg);
// Ends of the symmetry axis: [1..m] and [m+1..n]. ParityError for odd n.
std::pair<ColorSet, ColorSet> axis_endpoints(int n);
// A lies on the axis iff A = A*. ParityError for odd n.
bool on_axis(const ColorSet& a);

struct Fragment {
  Cube cube;
  int level = 1;  // 1 lower simplex, 2 octahedron, 3 upper simplex
};

using TriangleKey = std::array<ColorSet, 3>;

struct Fragmentation {
  std::vector<Fragment> fragments;
  // Horizontal facet (sorted vertex triple) -> (cube index, section level).
  std::map<TriangleKey, std::pair<std::size_t, int>> horizontal;
};

// S_1 = {Xi, Xj, Xk}, S_2 = {Xij, Xik, Xjk}.
TriangleKey section_vertices(const Cube& c, int level);
Fragmentation fragmentation(const Cubillage& q);

struct HalfFacet {
  Facet facet;
  bool upper = false;  // lower = (Y, Ya, Yb), upper = (Ya, Yb, Yab)
  friend bool operator==(const HalfFacet&, const HalfFacet&) = default;
};

struct Section {
  Cube cube;
  int level = 1;
  friend bool operator==(const Section&, const Section&) = default;
};

using MembraneItem = std::variant<HalfFacet, Section>;

std::array<ColorSet, 3> item_vertices(const MembraneItem& item);
bool item_less(const MembraneItem& a, const MembraneItem& b);

enum class MembraneKind { strong, weak };

struct Membrane {
  MembraneKind kind = MembraneKind::weak;
  Rational direction;  // t of the projection direction; strong only
  std::vector<MembraneItem> items;

  // Facets with both halves present.
  std::vector<Facet> facets() const;
};

Membrane strong_membrane(std::vector<Facet> facets, const Rational& direction);

// Items project injectively onto the whole target zonogon: pi^rho for weak,
// along the direction for strong.
std::optional<Diagnostic> check_membrane(const Membrane& m, const ZonotopeConfig& cfg);

// pi^rho image of a weak membrane as a combi on projected_zonogon(cfg).
FtqCombi membrane_to_combi(const Membrane& m, const ZonotopeConfig& cfg);

Membrane build_Ndiam(const Cubillage& q);

// Boundary facets below (first) and above (second) Z along direction t.
std::pair<std::vector<Facet>, std::vector<Facet>> direction_boundaries(const ZonotopeConfig& cfg, const Rational& t);

// Inserts a new color at `position`; cubes above the strong membrane shift
// by the new generator and the gap is filled by one cube per facet of it.
Cubillage expand_cubillage(const Cubillage& q, int position, const Membrane& n);

struct Pie {
  std::vector<Cube> cubes;
  Membrane membrane;  // the facets (X|ab) of the pie cubes (X|abc)
};

Pie extract_pie(const Cubillage& q, int color);
Cubillage contract_cubillage(const Cubillage& q, int color);

struct GapShrink {
  Membrane membrane;
  int iterations = 0;
};

GapShrink symmetric_membrane_between(const Cubillage& q, const std::vector<Facet>& lower,
                                     const std::vector<Facet>& upper);

Cubillage reconstruct_from_spectrum(std::span<const ColorSet> v, const ZonotopeConfig& cfg);

Cubillage build_symmetric_cubillage(int n, int scale_limit = 0);

}  // namespace sepsym
