#include "sepsym/cubillage.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sepsym/collections.hpp"
#include "sepsym/errors.hpp"
#include "sepsym/separation.hpp"

namespace sepsym {

Point3 ZonotopeConfig::center() const {
  Point3 s{0, 0, 0};
  for (const auto& g : generators) s = s + g;
  return {s.a / 2, s.b / 2, s.c / 2};
}

Rational ZonotopeConfig::depth_sum() const {
  Rational s = 0;
  for (const auto& g : generators) s += g.c;
  return s;
}

ZonotopeConfig make_zonotope_config(int n, bool symmetric) {
  GroundSet g(n);
  ZonotopeConfig cfg;
  cfg.n = n;
  cfg.symmetric = symmetric;
  Rational phi_sum = 0;
  for (int i = 1; i <= n; ++i) {
    const Rational t = 2 * i - n - 1;
    cfg.generators.push_back({t, 1, t * t});
    phi_sum += t * t;
  }
  cfg.rho = Rational(1) / (1 + 4 * phi_sum);
  return cfg;
}

std::optional<std::string> check_zonotope_config(const ZonotopeConfig& cfg) {
  if (static_cast<int>(cfg.generators.size()) != cfg.n) return "generator count differs from n";
  for (int i = 1; i <= cfg.n; ++i) {
    const Point3& g = cfg.theta(i);
    if (g.b != 1) return "generator " + std::to_string(i) + " does not have height 1";
    if (g.c != g.a * g.a) return "generator " + std::to_string(i) + " is off the parabola";
    if (i > 1 && !(cfg.t(i - 1) < g.a)) return "parameters not strictly increasing";
    if (cfg.symmetric && g.a != -cfg.t(cfg.n + 1 - i)) return "parameters not mirror symmetric";
  }
  if (!(cfg.rho > 0)) return "rho must be positive";
  if (auto bad = projected_zonogon(cfg).check()) return "projection: " + *bad;
  return std::nullopt;
}

Point3 embed3(const ColorSet& a, const ZonotopeConfig& cfg) {
  if (a.n() != cfg.n) throw GroundSetMismatch("set and zonotope over different ground sets");
  Point3 p{0, 0, 0};
  for (int c : a.labels()) p = p + cfg.theta(c);
  return p;
}

Point2 project_pi_rho(const Point3& p, const ZonotopeConfig& cfg) { return {p.a, p.b - cfg.rho * p.c}; }

ZonogonConfig projected_zonogon(const ZonotopeConfig& cfg) {
  ZonogonConfig z;
  z.n = cfg.n;
  z.symmetric = cfg.symmetric;
  for (const auto& g : cfg.generators) z.generators.push_back(project_pi_rho(g, cfg));
  return z;
}

Point2 project_along(const Point3& p, const Rational& t) { return {p.a - t * p.b, p.c - t * t * p.b}; }

Rational insertion_parameter(const ZonotopeConfig& cfg, int position) {
  if (position < 1 || position > cfg.n + 1) {
    throw BadInputError("insertion position " + std::to_string(position) + " outside [1.." +
                        std::to_string(cfg.n + 1) + "]");
  }
  if (cfg.n == 0) return 0;
  if (position == 1) return cfg.t(1) - 1;
  if (position == cfg.n + 1) return cfg.t(cfg.n) + 1;
  return (cfg.t(position - 1) + cfg.t(position)) / 2;
}

std::vector<ColorSet> Cube::vertices() const {
  std::vector<ColorSet> out;
  for (int mask = 0; mask < 8; ++mask) {
    ColorSet v = base;
    for (int s = 0; s < 3; ++s) {
      if (mask & (1 << s)) v = v.with(type[static_cast<std::size_t>(s)]);
    }
    out.push_back(v);
  }
  return out;
}

ColorSet Cube::top() const { return base.with(type[0]).with(type[1]).with(type[2]); }

bool Cube::operator<(const Cube& o) const {
  if (base != o.base) return base < o.base;
  return type < o.type;
}

std::array<ColorSet, 4> Facet::vertices() const {
  return {base, base.with(a), base.with(b), base.with(a).with(b)};
}

bool Facet::operator<(const Facet& o) const {
  if (base != o.base) return base < o.base;
  if (a != o.a) return a < o.a;
  return b < o.b;
}

std::string to_string(const Cube& c) {
  return "(" + c.base.to_string() + "|" + std::to_string(c.type[0]) + std::to_string(c.type[1]) +
         std::to_string(c.type[2]) + ")";
}

std::string to_string(const Facet& f) {
  return "(" + f.base.to_string() + "|" + std::to_string(f.a) + std::to_string(f.b) + ")";
}

namespace {

int side_sign(const ZonotopeConfig& cfg, int a, int b, const Point3& v) {
  return sign(det3(cfg.theta(a), cfg.theta(b), v));
}

Point3 direction(const Rational& t) { return {t, 1, t * t}; }

}  // namespace

std::vector<std::pair<Facet, int>> cube_facets(const Cube& c, const ZonotopeConfig& cfg) {
  std::vector<std::pair<Facet, int>> out;
  for (int k = 0; k < 3; ++k) {
    const int col = c.type[static_cast<std::size_t>(k)];
    const int a = c.type[static_cast<std::size_t>(k == 0 ? 1 : 0)];
    const int b = c.type[static_cast<std::size_t>(k == 2 ? 1 : 2)];
    const int s = side_sign(cfg, a, b, cfg.theta(col));
    out.push_back({Facet{c.base, a, b}, s});
    out.push_back({Facet{c.base.with(col), a, b}, -s});
  }
  return out;
}

std::pair<std::vector<Facet>, std::vector<Facet>> boundary_sides(int n) {
  std::vector<Facet> front;
  std::vector<Facet> rear;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      front.push_back({ColorSet::interval(n, a + 1, b - 1), a, b});
      rear.push_back({ColorSet::interval(n, a, b).complement(), a, b});
    }
  }
  std::sort(front.begin(), front.end());
  std::sort(rear.begin(), rear.end());
  return {front, rear};
}

int inner_side(const Facet& f, const ZonotopeConfig& cfg) {
  return side_sign(cfg, f.a, f.b, cfg.center() - embed3(f.base, cfg));
}

int outward_depth_sign(const Facet& f, const ZonotopeConfig& cfg) {
  // depth component of theta_a x theta_b is t_a - t_b
  return -inner_side(f, cfg) * sign(cfg.t(f.a) - cfg.t(f.b));
}

namespace {

std::vector<Facet> all_boundary(int n) {
  auto [front, rear] = boundary_sides(n);
  std::vector<Facet> out = front;
  out.insert(out.end(), rear.begin(), rear.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::string> cube_shape_error(const Cube& c, int n) {
  if (c.base.n() != n) return "base over a different ground set";
  for (int k = 0; k < 3; ++k) {
    const int col = c.type[static_cast<std::size_t>(k)];
    if (col < 1 || col > n) return "color out of range";
    if (k > 0 && c.type[static_cast<std::size_t>(k - 1)] >= col) return "type not strictly increasing";
    if (c.base.contains(col)) return "type color " + std::to_string(col) + " inside the base";
  }
  return std::nullopt;
}

std::vector<ColorSet> boundary_vertices(int n) {
  std::vector<ColorSet> out;
  out.push_back(ColorSet(n));
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      const ColorSet iv = ColorSet::interval(n, a, b);
      out.push_back(iv);
      out.push_back(iv.complement());
    }
  }
  return out;
}

}  // namespace

std::vector<ColorSet> spectrum(const Cubillage& q) {
  std::vector<ColorSet> out = boundary_vertices(q.config.n);
  for (const auto& c : q.cubes) {
    for (const auto& v : c.vertices()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Diagnostic> validate_cubillage(const Cubillage& q) {
  const int n = q.config.n;
  const ZonotopeConfig& cfg = q.config;
  if (n < 3 && !q.cubes.empty()) return Diagnostic{"BadCube", "fewer than three colors admit no cubes"};
  for (const auto& c : q.cubes) {
    if (auto err = cube_shape_error(c, n)) return Diagnostic{"BadCube", to_string(c) + ": " + *err};
  }
  std::map<std::array<int, 3>, int> triples;
  for (const auto& c : q.cubes) {
    if (++triples[c.type] > 1) {
      return Diagnostic{"TripleRepeated", "type " + std::to_string(c.type[0]) + std::to_string(c.type[1]) +
                                              std::to_string(c.type[2]) + " used twice"};
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (!triples.count({i, j, k})) {
          return Diagnostic{"TripleMissing",
                            "no cube of type " + std::to_string(i) + std::to_string(j) + std::to_string(k)};
        }
      }
    }
  }
  if (n >= 3) {
    std::map<Facet, std::pair<int, int>> uses;  // (+ side, - side)
    for (const auto& c : q.cubes) {
      for (const auto& [f, s] : cube_facets(c, cfg)) {
        auto& u = uses[f];
        int& slot = s > 0 ? u.first : u.second;
        if (++slot > 1) return Diagnostic{"FacetMismatch", "facet " + to_string(f) + " used twice on one side"};
      }
    }
    const std::vector<Facet> boundary = all_boundary(n);
    for (const auto& f : boundary) {
      const auto it = uses.find(f);
      const int inner = inner_side(f, cfg);
      const int in_count = it == uses.end() ? 0 : (inner > 0 ? it->second.first : it->second.second);
      const int out_count = it == uses.end() ? 0 : (inner > 0 ? it->second.second : it->second.first);
      if (in_count != 1 || out_count != 0) {
        return Diagnostic{"BoundaryMismatch", "boundary facet " + to_string(f) + " not covered from inside exactly once"};
      }
    }
    for (const auto& [f, u] : uses) {
      if (std::binary_search(boundary.begin(), boundary.end(), f)) continue;
      if (u.first != 1 || u.second != 1) {
        return Diagnostic{"FacetMismatch", "inner facet " + to_string(f) + " has an unmatched side"};
      }
    }
  }
  const std::vector<ColorSet> vertices_of_q = spectrum(q);
  if (static_cast<std::int64_t>(vertices_of_q.size()) != c_n(n)) {
    return Diagnostic{"SpectrumSize", std::to_string(vertices_of_q.size()) + " vertices, expected " + std::to_string(c_n(n))};
  }
  if (auto bad = pairwise_separated(vertices_of_q, Relation::chord())) {
    return Diagnostic{"SpectrumNotSeparated", bad->first.to_string() + " and " + bad->second.to_string()};
  }
  return std::nullopt;
}

Cube mu(const Cube& c) {
  const int n = c.base.n();
  std::array<int, 3> t{n + 1 - c.type[2], n + 1 - c.type[1], n + 1 - c.type[0]};
  return {k_involution(c.top()), t};
}

Facet mu(const Facet& f) {
  const int n = f.base.n();
  return {k_involution(f.base.with(f.a).with(f.b)), n + 1 - f.b, n + 1 - f.a};
}

bool is_symmetric_cubillage(const Cubillage& q) {
  std::set<Cube> cubes(q.cubes.begin(), q.cubes.end());
  return std::all_of(q.cubes.begin(), q.cubes.end(), [&](const Cube& c) { return cubes.count(mu(c)) != 0; });
}

Involutions geometric_involutions(const Point3& p, const ZonotopeConfig& cfg) {
  if (!cfg.symmetric) throw NotSymmetricError("geometric involutions need a symmetric configuration");
  const Point3 z = cfg.center();
  const Point3 omega{2 * z.a - p.a, 2 * z.b - p.b, 2 * z.c - p.c};
  const Point3 nu{-p.a, p.b, p.c};
  const Point3 mu_p{2 * z.a + p.a, 2 * z.b - p.b, 2 * z.c - p.c};
  return {omega, nu, mu_p};
}

Involutions geometric_involutions(const ColorSet& a, const ZonotopeConfig& cfg) {
  return geometric_involutions(embed3(a, cfg), cfg);
}

std::pair<ColorSet, ColorSet> axis_endpoints(int n) {
  if (n % 2 != 0) throw ParityError("the symmetry axis needs an even number of colors");
  return {ColorSet::interval(n, 1, n / 2), ColorSet::interval(n, n / 2 + 1, n)};
}

bool on_axis(const ColorSet& a) {
  if (a.n() % 2 != 0) throw ParityError("the symmetry axis needs an even number of colors");
  return k_involution(a) == a;
}

TriangleKey section_vertices(const Cube& c, int level) {
  const auto [i, j, k] = c.type;
  TriangleKey out;
  if (level == 1) {
    out = {c.base.with(i), c.base.with(j), c.base.with(k)};
  } else if (level == 2) {
    const ColorSet top = c.top();
    out = {top.without(k), top.without(j), top.without(i)};
  } else {
    throw std::invalid_argument("horizontal sections have level 1 or 2");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fragmentation fragmentation(const Cubillage& q) {
  Fragmentation f;
  for (std::size_t i = 0; i < q.cubes.size(); ++i) {
    for (int level = 1; level <= 3; ++level) f.fragments.push_back({q.cubes[i], level});
    for (int level = 1; level <= 2; ++level) {
      if (!f.horizontal.emplace(section_vertices(q.cubes[i], level), std::make_pair(i, level)).second) {
        throw std::logic_error("horizontal facet shared by two cubes");
      }
    }
  }
  return f;
}

std::array<ColorSet, 3> item_vertices(const MembraneItem& item) {
  if (const auto* h = std::get_if<HalfFacet>(&item)) {
    const auto v = h->facet.vertices();
    if (h->upper) return {v[1], v[2], v[3]};
    return {v[0], v[1], v[2]};
  }
  const auto& s = std::get<Section>(item);
  return section_vertices(s.cube, s.level);
}

bool item_less(const MembraneItem& a, const MembraneItem& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* x = std::get_if<HalfFacet>(&a)) {
    const auto& y = std::get<HalfFacet>(b);
    if (!(x->facet == y.facet)) return x->facet < y.facet;
    return x->upper < y.upper;
  }
  const auto& x = std::get<Section>(a);
  const auto& y = std::get<Section>(b);
  if (!(x.cube == y.cube)) return x.cube < y.cube;
  return x.level < y.level;
}

std::vector<Facet> Membrane::facets() const {
  std::map<Facet, int> halves;
  for (const auto& item : items) {
    if (const auto* h = std::get_if<HalfFacet>(&item)) halves[h->facet] |= h->upper ? 2 : 1;
  }
  std::vector<Facet> out;
  for (const auto& [f, mask] : halves) {
    if (mask == 3) out.push_back(f);
  }
  return out;
}

Membrane strong_membrane(std::vector<Facet> facets, const Rational& direction) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  Membrane m;
  m.kind = MembraneKind::strong;
  m.direction = direction;
  for (const auto& f : facets) {
    m.items.push_back(HalfFacet{f, false});
    m.items.push_back(HalfFacet{f, true});
  }
  return m;
}

std::optional<Diagnostic> check_membrane(const Membrane& m, const ZonotopeConfig& cfg) {
  const bool strong = m.kind == MembraneKind::strong;
  auto project = [&](const ColorSet& a) {
    const Point3 p = embed3(a, cfg);
    return strong ? project_along(p, m.direction) : project_pi_rho(p, cfg);
  };
  std::vector<Point2> gens;
  for (const auto& g : cfg.generators) gens.push_back(strong ? project_along(g, m.direction) : project_pi_rho(g, cfg));
  std::vector<Triangle2> tris;
  Rational total = 0;
  for (const auto& item : m.items) {
    if (strong && std::holds_alternative<Section>(item)) {
      return Diagnostic{"HorizontalInStrong", "a strong membrane holds a horizontal section"};
    }
    const auto v = item_vertices(item);
    Triangle2 t{project(v[0]), project(v[1]), project(v[2])};
    if (orient_sign(t[0], t[1], t[2]) == 0) {
      return Diagnostic{"Degenerate", "item " + v[0].to_string() + v[1].to_string() + v[2].to_string() +
                                          " projects to a degenerate triangle"};
    }
    total += triangle_area(t);
    tris.push_back(t);
  }
  for (std::size_t a = 0; a < tris.size(); ++a) {
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      if (interiors_overlap(tris[a], tris[b])) {
        return Diagnostic{"OverlapAt", to_string(overlap_witness(tris[a], tris[b]))};
      }
    }
  }
  const Rational area = zonogon_area(gens);
  if (total != area) return Diagnostic{"AreaMismatch", "items cover " + to_string(total) + " of " + to_string(area)};
  return std::nullopt;
}

FtqCombi membrane_to_combi(const Membrane& m, const ZonotopeConfig& cfg) {
  FtqCombi k{projected_zonogon(cfg), {}, false};
  for (const auto& item : m.items) {
    if (const auto* h = std::get_if<HalfFacet>(&item)) {
      const Facet& f = h->facet;
      if (h->upper) {
        k.tiles.push_back({TileKind::delta, f.base.with(f.a).with(f.b), {f.a, f.b}});
      } else {
        k.tiles.push_back({TileKind::nabla, f.base, {f.a, f.b}});
      }
      continue;
    }
    const auto& s = std::get<Section>(item);
    const std::vector<int> t(s.cube.type.begin(), s.cube.type.end());
    if (s.level == 1) {
      k.tiles.push_back({TileKind::upper, s.cube.base, t});
    } else {
      k.tiles.push_back({TileKind::lower, s.cube.top(), t});
    }
  }
  std::sort(k.tiles.begin(), k.tiles.end());
  k.symmetric = cfg.symmetric && cfg.n % 2 == 0 && is_symmetric_combi(k);
  return k;
}

Membrane build_Ndiam(const Cubillage& q) {
  const int n = q.config.n;
  if (n % 2 != 0) throw ParityError("the diamond membrane needs an even number of colors");
  if (!q.config.symmetric || !is_symmetric_cubillage(q)) throw NotSymmetricError("cubillage is not symmetric");
  const int m = n / 2;
  Membrane out;
  out.kind = MembraneKind::weak;
  auto [front, rear] = boundary_sides(n);
  for (const auto& f : front) {
    for (bool upper : {false, true}) {
      const HalfFacet h{f, upper};
      const auto v = item_vertices(h);
      if (std::all_of(v.begin(), v.end(), [&](const ColorSet& a) { return a.size() >= m; })) out.items.push_back(h);
    }
  }
  for (const auto& f : rear) {
    for (bool upper : {false, true}) {
      const HalfFacet h{f, upper};
      const auto v = item_vertices(h);
      if (std::all_of(v.begin(), v.end(), [&](const ColorSet& a) { return a.size() <= m; })) out.items.push_back(h);
    }
  }
  for (const auto& c : q.cubes) {
    if (c.base.size() == m - 1) out.items.push_back(Section{c, 1});
    if (c.base.size() == m - 2) out.items.push_back(Section{c, 2});
  }
  std::sort(out.items.begin(), out.items.end(), item_less);
  out.items.erase(std::unique(out.items.begin(), out.items.end()), out.items.end());
  return out;
}

std::pair<std::vector<Facet>, std::vector<Facet>> direction_boundaries(const ZonotopeConfig& cfg, const Rational& t) {
  const std::vector<Facet> boundary = all_boundary(cfg.n);
  if (cfg.n <= 2) return {boundary, boundary};
  std::vector<Facet> below;
  std::vector<Facet> above;
  const Point3 d = direction(t);
  for (const auto& f : boundary) {
    const bool z_above = inner_side(f, cfg) == side_sign(cfg, f.a, f.b, d);
    (z_above ? below : above).push_back(f);
  }
  return {below, above};
}

namespace {

// +1 for cubes above the strong membrane along d, -1 for those below;
// found by a flood fill that never crosses the membrane.
std::vector<int> classify_cubes(const Cubillage& q, const std::vector<Facet>& membrane, const Point3& d) {
  const ZonotopeConfig& cfg = q.config;
  std::map<Facet, std::vector<std::pair<std::size_t, int>>> holders;
  for (std::size_t i = 0; i < q.cubes.size(); ++i) {
    for (const auto& [f, s] : cube_facets(q.cubes[i], cfg)) holders[f].emplace_back(i, s);
  }
  const std::set<Facet> in_membrane(membrane.begin(), membrane.end());
  std::vector<int> label(q.cubes.size(), 0);
  std::deque<std::size_t> queue;
  for (const auto& f : membrane) {
    const int up = side_sign(cfg, f.a, f.b, d);
    const auto it = holders.find(f);
    if (it == holders.end()) continue;
    for (const auto& [i, s] : it->second) {
      const int want = s == up ? 1 : -1;
      if (label[i] != 0 && label[i] != want) throw BadMembraneError("cube " + to_string(q.cubes[i]) + " on both sides");
      if (label[i] == 0) queue.push_back(i);
      label[i] = want;
    }
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& [f, s] : cube_facets(q.cubes[i], cfg)) {
      if (in_membrane.count(f)) continue;
      for (const auto& [j, t] : holders[f]) {
        if (j == i) continue;
        if (label[j] == 0) {
          label[j] = label[i];
          queue.push_back(j);
        } else if (label[j] != label[i]) {
          throw BadMembraneError("cube " + to_string(q.cubes[j]) + " on both sides");
        }
      }
    }
  }
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == 0) throw BadMembraneError("cube " + to_string(q.cubes[i]) + " is cut off from the membrane");
  }
  return label;
}

ColorSet insert_color(const ColorSet& a, int p, bool member) {
  const std::uint64_t low = a.bits() & ((std::uint64_t{1} << (p - 1)) - 1);
  const std::uint64_t high = (a.bits() >> (p - 1)) << p;
  std::uint64_t bits = low | high;
  if (member) bits |= std::uint64_t{1} << (p - 1);
  return ColorSet(a.n() + 1, bits);
}

ColorSet drop_color(const ColorSet& a, int c) {
  const std::uint64_t low = a.bits() & ((std::uint64_t{1} << (c - 1)) - 1);
  const std::uint64_t high = (a.bits() >> c) << (c - 1);
  return ColorSet(a.n() - 1, low | high);
}

std::array<int, 3> sorted_type(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::set<Facet> known_facets(const Cubillage& q) {
  std::set<Facet> out;
  for (const auto& c : q.cubes) {
    for (const auto& [f, s] : cube_facets(c, q.config)) out.insert(f);
  }
  for (const auto& f : all_boundary(q.config.n)) out.insert(f);
  return out;
}

}  // namespace

Cubillage expand_cubillage(const Cubillage& q, int position, const Membrane& n_membrane) {
  const int n = q.config.n;
  const Rational t = insertion_parameter(q.config, position);
  if (n_membrane.kind != MembraneKind::strong) throw BadMembraneError("expansion needs a strong membrane");
  Membrane probe = n_membrane;
  probe.direction = t;
  if (auto d = check_membrane(probe, q.config)) throw BadMembraneError(d->kind + ": " + d->detail);
  const std::vector<Facet> facets = n_membrane.facets();
  if (facets.empty()) throw BadMembraneError("membrane has no facets");
  const std::set<Facet> known = known_facets(q);
  for (const auto& f : facets) {
    if (!known.count(f)) throw BadMembraneError("facet " + to_string(f) + " is not a facet of the cubillage");
  }
  const std::vector<int> side = classify_cubes(q, facets, direction(t));
  auto color = [&](int c) { return c >= position ? c + 1 : c; };
  Cubillage out{make_zonotope_config(n + 1, q.config.symmetric), {}, false};
  for (std::size_t i = 0; i < q.cubes.size(); ++i) {
    const Cube& c = q.cubes[i];
    out.cubes.push_back({insert_color(c.base, position, side[i] > 0), {color(c.type[0]), color(c.type[1]), color(c.type[2])}});
  }
  for (const auto& f : facets) {
    out.cubes.push_back({insert_color(f.base, position, false), sorted_type(color(f.a), color(f.b), position)});
  }
  std::sort(out.cubes.begin(), out.cubes.end());
  if (auto d = validate_cubillage(out)) throw BadMembraneError("expansion is invalid: " + d->kind + " " + d->detail);
  out.symmetric = out.config.symmetric && is_symmetric_cubillage(out);
  return out;
}

Pie extract_pie(const Cubillage& q, int color) {
  const int n = q.config.n;
  if (color < 1 || color > n) throw BadInputError("color " + std::to_string(color) + " outside the ground set");
  Pie pie;
  std::vector<Facet> facets;
  for (const auto& c : q.cubes) {
    if (std::find(c.type.begin(), c.type.end(), color) == c.type.end()) continue;
    pie.cubes.push_back(c);
    std::vector<int> rest;
    for (int x : c.type) {
      if (x != color) rest.push_back(x);
    }
    facets.push_back({c.base, rest[0], rest[1]});
  }
  pie.membrane = strong_membrane(std::move(facets), q.config.t(color));
  std::sort(pie.cubes.begin(), pie.cubes.end());
  return pie;
}

Cubillage contract_cubillage(const Cubillage& q, int color) {
  const int n = q.config.n;
  if (color < 1 || color > n || n < 2) throw BadInputError("color " + std::to_string(color) + " cannot be contracted");
  auto relabel = [&](int c) { return c > color ? c - 1 : c; };
  Cubillage out{make_zonotope_config(n - 1, q.config.symmetric), {}, false};
  for (const auto& c : q.cubes) {
    if (std::find(c.type.begin(), c.type.end(), color) != c.type.end()) continue;
    out.cubes.push_back({drop_color(c.base.without(color), color), {relabel(c.type[0]), relabel(c.type[1]), relabel(c.type[2])}});
  }
  std::sort(out.cubes.begin(), out.cubes.end());
  out.symmetric = out.config.symmetric && is_symmetric_cubillage(out);
  return out;
}

GapShrink symmetric_membrane_between(const Cubillage& q, const std::vector<Facet>& lower,
                                     const std::vector<Facet>& upper) {
  const int n = q.config.n;
  if (n % 2 != 0) throw BadInputError("gap shrinking needs an even number of colors");
  if (!is_symmetric_cubillage(q)) throw BadInputError("cubillage is not symmetric");
  std::set<Facet> h_lo(lower.begin(), lower.end());
  std::set<Facet> h_hi(upper.begin(), upper.end());
  {
    std::set<Facet> image;
    for (const auto& f : h_lo) image.insert(mu(f));
    if (image != h_hi) throw BadInputError("the two membranes are not symmetric to each other");
  }
  const Rational zero = 0;
  for (const auto* h : {&lower, &upper}) {
    if (auto d = check_membrane(strong_membrane(*h, zero), q.config)) {
      throw BadInputError("input is not a 0-membrane: " + d->kind + " " + d->detail);
    }
  }
  GapShrink out;
  if (q.cubes.empty()) {
    out.membrane = strong_membrane(lower, zero);
    return out;
  }
  const Point3 d0 = direction(zero);
  const std::vector<int> side_lo = classify_cubes(q, lower, d0);
  const std::vector<int> side_hi = classify_cubes(q, upper, d0);
  std::set<Cube> gap;
  for (std::size_t i = 0; i < q.cubes.size(); ++i) {
    if (side_lo[i] < 0 && side_hi[i] > 0) throw BadInputError("lower membrane passes above the upper one");
    if (side_lo[i] > 0 && side_hi[i] < 0) gap.insert(q.cubes[i]);
  }
  const ZonotopeConfig& cfg = q.config;
  // A facet is 0-front for a cube when the cube lies on its +theta_0 side.
  auto split = [&](const Cube& c) {
    std::pair<std::vector<Facet>, std::vector<Facet>> fr;
    for (const auto& [f, s] : cube_facets(c, cfg)) {
      (s == side_sign(cfg, f.a, f.b, d0) ? fr.first : fr.second).push_back(f);
    }
    return fr;
  };
  while (!gap.empty()) {
    std::set<Facet> fronts;
    for (const auto& c : gap) {
      for (const auto& f : split(c).first) fronts.insert(f);
    }
    const Cube* pick = nullptr;
    for (const auto& c : gap) {
      const auto rear = split(c).second;
      if (std::none_of(rear.begin(), rear.end(), [&](const Facet& f) { return fronts.count(f) != 0; })) {
        pick = &c;
        break;
      }
    }
    if (pick == nullptr) throw std::logic_error("gap without a maximal cube");
    const Cube c = *pick;
    const Cube cm = mu(c);
    if (cm == c || !gap.count(cm)) throw std::logic_error("maximal gap cube " + to_string(c) + " has no partner");
    const auto [c_front, c_rear] = split(c);
    const auto [m_front, m_rear] = split(cm);
    for (const auto& f : c_rear) {
      if (!h_hi.erase(f)) throw std::logic_error("maximal gap cube does not touch the upper membrane");
    }
    h_hi.insert(c_front.begin(), c_front.end());
    for (const auto& f : m_front) {
      if (!h_lo.erase(f)) throw std::logic_error("minimal gap cube does not touch the lower membrane");
    }
    h_lo.insert(m_rear.begin(), m_rear.end());
    gap.erase(c);
    gap.erase(cm);
    ++out.iterations;
  }
  if (h_lo != h_hi) throw std::logic_error("gap closed but the membranes differ");
  out.membrane = strong_membrane(std::vector<Facet>(h_lo.begin(), h_lo.end()), zero);
  return out;
}

namespace {

class CubeSearch {
 public:
  CubeSearch(const std::vector<ColorSet>& v, const ZonotopeConfig& cfg) : cfg_(cfg) {
    const int n = cfg.n;
    const std::set<ColorSet> in_v(v.begin(), v.end());
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          std::vector<Cand> list;
          for (const auto& x : v) {
            if (x.contains(i) || x.contains(j) || x.contains(k)) continue;
            const Cube c{x, {i, j, k}};
            const auto verts = c.vertices();
            if (!std::all_of(verts.begin(), verts.end(), [&](const ColorSet& a) { return in_v.count(a) != 0; })) continue;
            Cand cand{c, {}};
            for (const auto& [f, s] : cube_facets(c, cfg)) cand.slots.push_back(slot(f, s));
            list.push_back(std::move(cand));
          }
          groups_.push_back(std::move(list));
        }
      }
    }
    for (const auto& f : all_boundary(n)) forbidden_.insert(slot(f, -inner_side(f, cfg)));
  }

  std::optional<Cubillage> run() {
    chosen_.assign(groups_.size(), -1);
    if (search(0)) return result_;
    return std::nullopt;
  }

 private:
  struct Cand {
    Cube cube;
    std::vector<int> slots;
  };

  int slot(const Facet& f, int s) {
    auto [it, fresh] = slot_ids_.try_emplace({f, s}, static_cast<int>(slot_ids_.size()));
    return it->second;
  }

  bool viable(const Cand& c) const {
    return std::none_of(c.slots.begin(), c.slots.end(),
                        [&](int s) { return used_.count(s) != 0 || forbidden_.count(s) != 0; });
  }

  bool search(std::size_t depth) {
    if (depth == groups_.size()) return finish();
    std::size_t best = groups_.size();
    std::vector<std::size_t> best_fit;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (chosen_[g] >= 0) continue;
      std::vector<std::size_t> fit;
      for (std::size_t c = 0; c < groups_[g].size(); ++c) {
        if (viable(groups_[g][c])) fit.push_back(c);
      }
      if (best == groups_.size() || fit.size() < best_fit.size()) {
        best = g;
        best_fit = std::move(fit);
        if (best_fit.empty()) return false;
      }
    }
    for (std::size_t c : best_fit) {
      const Cand& cand = groups_[best][c];
      for (int s : cand.slots) used_.insert(s);
      chosen_[best] = static_cast<int>(c);
      if (search(depth + 1)) return true;
      chosen_[best] = -1;
      for (int s : cand.slots) used_.erase(s);
    }
    return false;
  }

  bool finish() {
    Cubillage q{cfg_, {}, false};
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      q.cubes.push_back(groups_[g][static_cast<std::size_t>(chosen_[g])].cube);
    }
    std::sort(q.cubes.begin(), q.cubes.end());
    if (validate_cubillage(q)) return false;
    result_ = std::move(q);
    return true;
  }

  const ZonotopeConfig& cfg_;
  std::vector<std::vector<Cand>> groups_;
  std::map<std::pair<Facet, int>, int> slot_ids_;
  std::set<int> forbidden_;
  std::set<int> used_;
  std::vector<int> chosen_;
  Cubillage result_;
};

}  // namespace

Cubillage reconstruct_from_spectrum(std::span<const ColorSet> v, const ZonotopeConfig& cfg) {
  const int n = cfg.n;
  std::vector<ColorSet> sorted(v.begin(), v.end());
  for (const auto& a : sorted) {
    if (a.n() != n) throw GroundSetMismatch("collection and zonotope over different ground sets");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<std::int64_t>(sorted.size()) != c_n(n)) {
    throw NotMaximalError("collection has " + std::to_string(sorted.size()) + " sets, a maximal one has " +
                          std::to_string(c_n(n)));
  }
  if (auto bad = pairwise_separated(sorted, Relation::chord())) {
    throw NotMaximalError(bad->first.to_string() + " and " + bad->second.to_string() + " are not chord separated");
  }
  Cubillage q{cfg, {}, false};
  if (n >= 3) {
    CubeSearch search(sorted, cfg);
    auto found = search.run();
    if (!found) throw NoCubillageError("no cubillage has this spectrum");
    q = *found;
  }
  if (spectrum(q) != sorted) throw NoCubillageError("reconstructed spectrum differs from the input");
  q.symmetric = cfg.symmetric && is_symmetric_cubillage(q);
  return q;
}

Cubillage build_symmetric_cubillage(int n, int scale_limit) {
  GroundSet g(n);
  const int limit = scale_limit > 0 ? scale_limit : 8;
  if (n > limit) throw ScaleLimitError("symmetric cubillages are built up to n = " + std::to_string(limit));
  const ZonotopeConfig cfg = make_zonotope_config(n, true);
  if (n <= 2) return Cubillage{cfg, {}, true};
  Cubillage out;
  if (n % 2 == 0) {
    const SymCollection v = greedy_symmetric_completion(SymCollection(n, Relation::chord()));
    out = reconstruct_from_spectrum(v.members(), cfg);
  } else {
    const int m = n / 2;
    const Cubillage even = build_symmetric_cubillage(n - 1, limit);
    const auto [lower, upper] = direction_boundaries(even.config, 0);
    const GapShrink h = symmetric_membrane_between(even, lower, upper);
    out = expand_cubillage(even, m + 1, h.membrane);
  }
  if (!is_symmetric_cubillage(out)) throw NotSymmetricError("built cubillage is not symmetric");
  out.symmetric = true;
  return out;
}

}  // namespace sepsym
