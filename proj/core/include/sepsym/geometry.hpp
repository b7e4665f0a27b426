#pragma once

// Exact planar and spatial primitives. Every coordinate is a rational number;
// no predicate in the library ever goes through floating point.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sepsym {

using Rational = boost::multiprecision::cpp_rational;

struct Point2 {
  Rational x;
  Rational y;

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

struct Point3 {
  Rational a;  // left-to-right
  Rational b;  // height
  Rational c;  // depth

  Point3 operator+(const Point3& o) const { return {a + o.a, b + o.b, c + o.c}; }
  Point3 operator-(const Point3& o) const { return {a - o.a, b - o.b, c - o.c}; }
  bool operator==(const Point3& o) const { return a == o.a && b == o.b && c == o.c; }
};

Rational cross(const Point2& u, const Point2& v);
// Twice the signed area of (p, q, r); positive when counter-clockwise.
Rational orient(const Point2& p, const Point2& q, const Point2& r);
int orient_sign(const Point2& p, const Point2& q, const Point2& r);
Rational det3(const Point3& u, const Point3& v, const Point3& w);
int sign(const Rational& v);

using Triangle2 = std::array<Point2, 3>;

// Absolute area of a triangle.
Rational triangle_area(const Triangle2& t);
// Triangle with counter-clockwise vertex order.
Triangle2 ccw(Triangle2 t);

// True when the open interiors of two non-degenerate triangles meet.
bool interiors_overlap(const Triangle2& s, const Triangle2& t);

// A point strictly inside both triangles; only valid when interiors_overlap.
Point2 overlap_witness(const Triangle2& s, const Triangle2& t);

// p lies in the closed triangle.
bool in_closed_triangle(const Point2& p, const Triangle2& t);

// Area of the zonogon spanned by the given generators.
Rational zonogon_area(std::span<const Point2> generators);

double to_double(const Rational& v);
std::string to_string(const Rational& v);
std::string to_string(const Point2& p);

}  // namespace sepsym
