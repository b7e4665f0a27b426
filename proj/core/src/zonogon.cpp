#include "sepsym/zonogon.hpp"

#include <set>
#include <stdexcept>

#include "sepsym/errors.hpp"

namespace sepsym {

Rational ZonogonConfig::middle_height() const {
  if (!has_middle_line()) throw ParityError("middle line needs a symmetric zonogon with an even number of colors");
  Rational h = 0;
  for (int i = 1; i <= n / 2; ++i) h += xi(i).y;
  return h;
}

Point2 ZonogonConfig::center() const {
  Point2 s{0, 0};
  for (const auto& g : generators) s = s + g;
  return {s.x / 2, s.y / 2};
}

Rational ZonogonConfig::area() const { return zonogon_area(generators); }

std::optional<std::string> ZonogonConfig::check() const {
  if (static_cast<int>(generators.size()) != n) return "generator count differs from n";
  const Rational quarter(1, 4);
  for (int i = 1; i <= n; ++i) {
    const Point2& g = xi(i);
    if (i > 1 && !(xi(i - 1).x < g.x)) return "x coordinates not strictly increasing at color " + std::to_string(i);
    const Rational delta = 1 - g.y;
    if (delta < 0 || delta > quarter) return "height of color " + std::to_string(i) + " outside [3/4, 1]";
    if (delta == 0 && g.x != 0) return "color " + std::to_string(i) + " has delta 0 but is not vertical";
  }
  // Strict concavity: for i<j<k, xi_j = l*xi_i + l'*xi_k with l, l' > 0 and
  // l + l' > 1, i.e. xi_j lies strictly beyond the chord from xi_i to xi_k.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const Point2& a = xi(i);
        const Point2& b = xi(j);
        const Point2& c = xi(k);
        const Rational d = cross(a, c);
        if (d == 0) return "generators " + std::to_string(i) + "," + std::to_string(k) + " are parallel";
        const Rational l = cross(b, c) / d;
        const Rational lp = cross(a, b) / d;
        if (!(l > 0 && lp > 0 && l + lp > 1)) {
          return "strict concavity fails for " + std::to_string(i) + "<" + std::to_string(j) + "<" + std::to_string(k);
        }
      }
    }
  }
  std::set<std::pair<Rational, Rational>> seen;
  auto insert = [&](const Point2& p) { return seen.emplace(p.x, p.y).second; };
  for (int i = 1; i <= n; ++i) {
    if (!insert(xi(i))) return "generator " + std::to_string(i) + " repeats";
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!insert(xi(j) - xi(i))) return "difference vector " + std::to_string(i) + std::to_string(j) + " repeats";
    }
  }
  if (symmetric) {
    for (int i = 1; i <= n; ++i) {
      const Point2& g = xi(i);
      const Point2& h = xi(n + 1 - i);
      if (g.x != -h.x || g.y != h.y) return "generators " + std::to_string(i) + " and its mirror are not symmetric";
    }
  }
  return std::nullopt;
}

ZonogonConfig make_zonogon_config(int n, bool symmetric) {
  GroundSet g(n);
  ZonogonConfig cfg;
  cfg.n = n;
  cfg.symmetric = symmetric;
  const Rational denom = Rational(4 * (n + 1) * (n + 1));
  for (int i = 1; i <= n; ++i) {
    const Rational x = 2 * i - n - 1;
    cfg.generators.push_back({x, 1 - x * x / denom});
  }
  return cfg;
}

Point2 embed(const ColorSet& a, const ZonogonConfig& cfg) {
  if (a.n() != cfg.n) throw GroundSetMismatch("set and zonogon over different ground sets");
  Point2 p{0, 0};
  for (int c : a.labels()) p = p + cfg.xi(c);
  return p;
}

std::vector<ColorSet> left_boundary(int n) {
  std::vector<ColorSet> out;
  for (int i = 0; i <= n; ++i) out.push_back(ColorSet::interval(n, 1, i));
  return out;
}

std::vector<ColorSet> right_boundary(int n) {
  std::vector<ColorSet> out;
  for (int i = 0; i <= n; ++i) out.push_back(ColorSet::interval(n, n + 1 - i, n));
  return out;
}

}  // namespace sepsym
