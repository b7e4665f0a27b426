#include "sepsym/geometry.hpp"

#include <stdexcept>

namespace sepsym {

Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

Rational orient(const Point2& p, const Point2& q, const Point2& r) { return cross(q - p, r - p); }

int sign(const Rational& v) { return v.sign(); }

int orient_sign(const Point2& p, const Point2& q, const Point2& r) { return sign(orient(p, q, r)); }

Rational det3(const Point3& u, const Point3& v, const Point3& w) {
  return u.a * (v.b * w.c - v.c * w.b) - u.b * (v.a * w.c - v.c * w.a) + u.c * (v.a * w.b - v.b * w.a);
}

Rational triangle_area(const Triangle2& t) {
  Rational twice = orient(t[0], t[1], t[2]);
  if (twice < 0) twice = -twice;
  return twice / 2;
}

Triangle2 ccw(Triangle2 t) {
  if (orient_sign(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  return t;
}

namespace {

// Separating-axis test over the edges of `s`: some edge has all of `t` on its
// closed outer side.
bool separated_by_edge_of(const Triangle2& s, const Triangle2& t) {
  for (int e = 0; e < 3; ++e) {
    const Point2& p = s[e];
    const Point2& q = s[(e + 1) % 3];
    bool all_outside = true;
    for (const auto& v : t) {
      if (orient_sign(p, q, v) > 0) {
        all_outside = false;
        break;
      }
    }
    if (all_outside) return true;
  }
  return false;
}

// Clip a convex counter-clockwise polygon by the closed left half-plane of p->q.
std::vector<Point2> clip(const std::vector<Point2>& poly, const Point2& p, const Point2& q) {
  std::vector<Point2> out;
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % k];
    const Rational oc = orient(p, q, cur);
    const Rational on = orient(p, q, nxt);
    if (oc >= 0) out.push_back(cur);
    if ((oc > 0 && on < 0) || (oc < 0 && on > 0)) {
      const Rational t = oc / (oc - on);
      out.push_back({cur.x + (nxt.x - cur.x) * t, cur.y + (nxt.y - cur.y) * t});
    }
  }
  return out;
}

}  // namespace

bool interiors_overlap(const Triangle2& s, const Triangle2& t) {
  const Triangle2 a = ccw(s);
  const Triangle2 b = ccw(t);
  return !separated_by_edge_of(a, b) && !separated_by_edge_of(b, a);
}

Point2 overlap_witness(const Triangle2& s, const Triangle2& t) {
  const Triangle2 a = ccw(s);
  const Triangle2 b = ccw(t);
  std::vector<Point2> poly(a.begin(), a.end());
  for (int e = 0; e < 3 && !poly.empty(); ++e) poly = clip(poly, b[e], b[(e + 1) % 3]);
  if (poly.size() < 3) throw std::logic_error("overlap_witness called on non-overlapping triangles");
  Point2 sum{0, 0};
  for (const auto& p : poly) sum = sum + p;
  const Rational k = static_cast<int>(poly.size());
  return {sum.x / k, sum.y / k};
}

bool in_closed_triangle(const Point2& p, const Triangle2& t) {
  const Triangle2 c = ccw(t);
  for (int e = 0; e < 3; ++e) {
    if (orient_sign(c[e], c[(e + 1) % 3], p) < 0) return false;
  }
  return true;
}

Rational zonogon_area(std::span<const Point2> generators) {
  Rational area = 0;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      Rational d = cross(generators[i], generators[j]);
      area += d < 0 ? Rational(-d) : d;
    }
  }
  return area;
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

std::string to_string(const Rational& v) { return v.str(); }

std::string to_string(const Point2& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

}  // namespace sepsym
