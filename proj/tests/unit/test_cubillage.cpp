#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sepsym/collections.hpp"
#include "sepsym/cubillage.hpp"
#include "sepsym/errors.hpp"

using namespace sepsym;

namespace {

ColorSet S(int n, std::initializer_list<int> c) { return ColorSet(n, c); }

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Cubillage single_cube() {
  return Cubillage{make_zonotope_config(3, true), {Cube{ColorSet(3), {1, 2, 3}}}, true};
}

std::vector<ColorSet> sorted(std::vector<ColorSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Single cube grown by a fourth color along the rear boundary.
Cubillage four_cubes() {
  const auto q = single_cube();
  const Rational t = insertion_parameter(q.config, 4);
  const auto [below, above] = direction_boundaries(q.config, t);
  return expand_cubillage(q, 4, strong_membrane(above, t));
}

std::vector<Cubillage> fixtures(int n) {
  std::vector<Cubillage> out;
  out.push_back(build_symmetric_cubillage(n));
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto v = greedy_completion(n, Relation::chord(), {}, seed);
    out.push_back(reconstruct_from_spectrum(v, make_zonotope_config(n, false)));
  }
  return out;
}

std::set<Facet> facet_set(const std::vector<Facet>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("cubillage") {

TEST_CASE("zonotope configuration") {
  const auto c3 = make_zonotope_config(3, true);
  CHECK(c3.t(1) == -2);
  CHECK(c3.t(2) == 0);
  CHECK(c3.t(3) == 2);
  const auto c5 = make_zonotope_config(5, true);
  for (int i = 1; i <= 5; ++i) {
    CHECK(c5.theta(i).c == c5.t(i) * c5.t(i));
    CHECK(c5.t(i) == -c5.t(6 - i));
    CHECK(c5.theta(i).b == 1);
  }
  for (int n = 1; n <= 10; ++n) {
    const auto cfg = make_zonotope_config(n, n % 2 == 0);
    CHECK_FALSE(check_zonotope_config(cfg).has_value());
    CHECK_FALSE(projected_zonogon(cfg).check().has_value());
    std::set<Rational> slopes;
    for (int i = 1; i <= n; ++i) {
      const Point2 p = project_pi_rho(cfg.theta(i), cfg);
      slopes.insert(p.x / p.y);
    }
    CHECK(static_cast<int>(slopes.size()) == n);
  }
}

TEST_CASE("projection arithmetic") {
  ZonotopeConfig cfg = make_zonotope_config(3, true);
  cfg.rho = Rational(1, 4);
  const Point2 p = project_pi_rho(Point3{0, 2, 4}, cfg);
  CHECK(p.x == 0);
  CHECK(p.y == 1);
  const Point2 q = project_along(Point3{3, 1, 9}, 3);
  CHECK(q.x == 0);
  CHECK(q.y == 0);
}

TEST_CASE("validation examples") {
  const auto q = single_cube();
  CHECK_FALSE(validate_cubillage(q).has_value());
  CHECK(sorted(spectrum(q)) == sorted(all_subsets(3)));

  auto dup = four_cubes();
  dup.cubes[1].type = dup.cubes[0].type;
  const auto d = validate_cubillage(dup);
  REQUIRE(d.has_value());
  CHECK(d->kind == "TripleRepeated");

  const auto q4 = four_cubes();
  CHECK_FALSE(validate_cubillage(q4).has_value());
  CHECK(q4.cubes.size() == 4);
  CHECK(spectrum(q4).size() == 15);
}

TEST_CASE("validation reports broken facet matching") {
  auto q = build_symmetric_cubillage(4);
  q.cubes[0].base = q.cubes[0].base.complement() - ColorSet::from_labels(4, {q.cubes[0].type[0], q.cubes[0].type[1], q.cubes[0].type[2]});
  const auto d = validate_cubillage(q);
  REQUIRE(d.has_value());
  CHECK((d->kind == "FacetMismatch" || d->kind == "BoundaryMismatch" || d->kind == "BadCube"));
}

TEST_CASE("spectra") {
  const auto q5 = build_symmetric_cubillage(5);
  CHECK(spectrum(q5).size() == 26);
  for (int n = 3; n <= 6; ++n) {
    const auto q = build_symmetric_cubillage(n);
    const auto v = spectrum(q);
    std::set<ColorSet> vs(v.begin(), v.end());
    for (const auto& a : v) CHECK(vs.count(k_involution(a)) == 1);
    for (const auto& [h, count] : level_profile(v)) CHECK(count == h * (n - h) + 1);
    CHECK(oracle::pairwise(v, oracle::Rel::chord));
  }
}

TEST_CASE("boundary sides") {
  const auto [front, rear] = boundary_sides(3);
  CHECK(front.size() == 3);
  CHECK(rear.size() == 3);
  std::set<ColorSet> verts;
  for (const auto& f : front) {
    for (const auto& a : f.vertices()) verts.insert(a);
  }
  std::set<ColorSet> intervals;
  for (const auto& a : all_subsets(3)) {
    if (is_interval(a)) intervals.insert(a);
  }
  CHECK(verts == intervals);
  CHECK(verts.size() == 7);

  for (int n = 2; n <= 6; n += 2) {
    const auto [fr, re] = boundary_sides(n);
    CHECK(static_cast<int>(fr.size()) == binom(n, 2));
    std::vector<Facet> image;
    for (const auto& f : fr) image.push_back(mu(f));
    CHECK(facet_set(image) == facet_set(re));
    // Z(2,3) is flat, so depth only means something from three colors on.
    if (n < 3) continue;
    const auto cfg = make_zonotope_config(n, true);
    for (const auto& f : fr) CHECK(outward_depth_sign(f, cfg) < 0);
    for (const auto& f : re) CHECK(outward_depth_sign(f, cfg) > 0);
  }
}

TEST_CASE("geometric involutions") {
  for (int n = 2; n <= 6; n += 2) {
    const auto cfg = make_zonotope_config(n, true);
    for (const auto& a : all_subsets(n)) {
      const auto g = geometric_involutions(a, cfg);
      CHECK(g.mu == embed3(k_involution(a), cfg));
      CHECK(on_axis(a) == (a == k_involution(a)));
    }
    const auto c = geometric_involutions(cfg.center(), cfg);
    CHECK(c.omega == cfg.center());
  }
  const auto [lo, hi] = axis_endpoints(4);
  CHECK(lo == S(4, {1, 2}));
  CHECK(hi == S(4, {3, 4}));
  CHECK_THROWS_AS(axis_endpoints(3), ParityError);
  CHECK_THROWS_AS(on_axis(S(3, {1})), ParityError);
}

TEST_CASE("fragmentation") {
  const auto f = fragmentation(single_cube());
  REQUIRE(f.fragments.size() == 3);
  CHECK(f.fragments[0].level == 1);
  CHECK(f.fragments[2].level == 3);
  const auto s1 = section_vertices(single_cube().cubes[0], 1);
  CHECK(std::set<ColorSet>(s1.begin(), s1.end()) == std::set<ColorSet>{S(3, {1}), S(3, {2}), S(3, {3})});
  const auto s2 = section_vertices(single_cube().cubes[0], 2);
  CHECK(std::set<ColorSet>(s2.begin(), s2.end()) == std::set<ColorSet>{S(3, {1, 2}), S(3, {1, 3}), S(3, {2, 3})});

  for (const auto& q : fixtures(4)) {
    const auto fr = fragmentation(q);
    CHECK(fr.fragments.size() == 3 * q.cubes.size());
    // One key per section: no two sections collide.
    CHECK(fr.horizontal.size() == 2 * q.cubes.size());
  }
}

TEST_CASE("membrane checks") {
  const auto q = single_cube();
  const auto [front, rear] = boundary_sides(3);
  // Seen from either end direction the front side is a section; from an
  // interior direction it folds over itself.
  for (int p : {1, 4}) {
    CHECK_FALSE(check_membrane(strong_membrane(front, insertion_parameter(q.config, p)), q.config).has_value());
  }
  CHECK(check_membrane(strong_membrane(front, insertion_parameter(q.config, 2)), q.config).has_value());
  Membrane w = strong_membrane(front, 0);
  w.kind = MembraneKind::weak;
  CHECK_FALSE(check_membrane(w, q.config).has_value());

  // Front side with its lower-simplex faces replaced by the rear face and S_1.
  Membrane n2;
  n2.kind = MembraneKind::weak;
  n2.items = {HalfFacet{Facet{ColorSet(3), 1, 3}, false}, Section{q.cubes[0], 1},
              HalfFacet{Facet{ColorSet(3), 1, 2}, true},  HalfFacet{Facet{ColorSet(3), 2, 3}, true},
              HalfFacet{Facet{S(3, {2}), 1, 3}, false},   HalfFacet{Facet{S(3, {2}), 1, 3}, true}};
  CHECK_FALSE(check_membrane(n2, q.config).has_value());
  const auto k = membrane_to_combi(n2, q.config);
  CHECK_FALSE(validate_ftq_combi(k).has_value());

  Membrane twice = w;
  twice.items.push_back(twice.items.front());
  const auto d = check_membrane(twice, q.config);
  REQUIRE(d.has_value());
  CHECK(d->kind == "OverlapAt");

  Membrane mixed = n2;
  mixed.kind = MembraneKind::strong;
  REQUIRE(check_membrane(mixed, q.config).has_value());
  CHECK(check_membrane(mixed, q.config)->kind == "HorizontalInStrong");
}

TEST_CASE("lower half of a vertical facet projects to a nabla tile") {
  const auto q = build_symmetric_cubillage(4);
  const auto zcfg = projected_zonogon(q.config);
  for (const auto& f : boundary_sides(4).first) {
    Membrane m;
    m.items = {HalfFacet{f, false}};
    const auto k = membrane_to_combi(m, q.config);
    REQUIRE(k.tiles.size() == 1);
    CHECK(k.tiles[0].kind == TileKind::nabla);
    const auto poly = tile_polygon(k.tiles[0], zcfg);
    const auto v = item_vertices(m.items[0]);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::find(poly.begin(), poly.end(), project_pi_rho(embed3(v[i], q.config), q.config)) != poly.end());
    }
  }
}

TEST_CASE("diamond membrane") {
  for (int n : {4, 6}) {
    const auto q = build_symmetric_cubillage(n);
    const auto m = build_Ndiam(q);
    CHECK_FALSE(check_membrane(m, q.config).has_value());
    const auto k = membrane_to_combi(m, q.config);
    CHECK_FALSE(validate_ftq_combi(k).has_value());
    CHECK(is_symmetric_combi(k));
    const auto v = k.vertex_set();
    CHECK(static_cast<std::int64_t>(v.size()) == s_n(n));
    const SymCollection c(n, Relation::weak(), v);
    CHECK_FALSE(c.check().has_value());
  }
  CHECK_THROWS_AS(build_Ndiam(build_symmetric_cubillage(3)), ParityError);
}

TEST_CASE("expansion examples") {
  const Cubillage empty{make_zonotope_config(2, true), {}, true};
  for (int p = 1; p <= 3; ++p) {
    const Rational t = insertion_parameter(empty.config, p);
    const auto q = expand_cubillage(empty, p, strong_membrane({Facet{ColorSet(2), 1, 2}}, t));
    REQUIRE(q.cubes.size() == 1);
    CHECK(q.cubes[0] == Cube{ColorSet(3), {1, 2, 3}});
  }
  CHECK_THROWS_AS(expand_cubillage(single_cube(), 4, strong_membrane({Facet{ColorSet(3), 1, 2}}, 0)),
                  BadMembraneError);
}

TEST_CASE("pies") {
  const auto pie = extract_pie(single_cube(), 2);
  CHECK(pie.cubes.size() == 1);
  CHECK(pie.membrane.facets() == std::vector<Facet>{Facet{ColorSet(3), 1, 3}});

  const auto q4 = four_cubes();
  const auto p4 = extract_pie(q4, 4);
  CHECK(p4.cubes.size() == 3);
  CHECK_FALSE(check_membrane(p4.membrane, q4.config).has_value());

  for (int n = 4; n <= 6; ++n) {
    const auto q = build_symmetric_cubillage(n);
    for (int c = 1; c <= n; ++c) {
      const auto a = extract_pie(q, c);
      const auto b = extract_pie(q, n + 1 - c);
      CHECK(static_cast<int>(a.cubes.size()) == binom(n - 1, 2));
      CHECK(static_cast<int>(a.membrane.facets().size()) == binom(n - 1, 2));
      std::vector<Cube> image;
      for (const auto& cube : a.cubes) image.push_back(mu(cube));
      std::sort(image.begin(), image.end());
      CHECK(image == b.cubes);
    }
  }
}

TEST_CASE("contraction examples") {
  const auto q4 = four_cubes();
  CHECK(contract_cubillage(q4, 4).cubes == single_cube().cubes);
  const auto e = contract_cubillage(single_cube(), 2);
  CHECK(e.config.n == 2);
  CHECK(e.cubes.empty());
}

TEST_CASE("gap shrinking") {
  const auto q2 = build_symmetric_cubillage(2);
  const auto [lo2, hi2] = direction_boundaries(q2.config, 0);
  const auto g2 = symmetric_membrane_between(q2, lo2, hi2);
  CHECK(g2.iterations == 0);

  for (int n = 4; n <= 6; n += 2) {
    const auto q = build_symmetric_cubillage(n);
    const auto [lo, hi] = direction_boundaries(q.config, 0);
    const auto g = symmetric_membrane_between(q, lo, hi);
    const auto facets = g.membrane.facets();
    CHECK(static_cast<int>(facets.size()) == binom(n, 2));
    CHECK(g.iterations <= binom(n, 3) / 2);
    if (n == 4) CHECK(g.iterations <= 2);
    std::vector<Facet> image;
    for (const auto& f : facets) image.push_back(mu(f));
    CHECK(facet_set(image) == facet_set(facets));
    CHECK_FALSE(check_membrane(g.membrane, q.config).has_value());
  }
  const auto q4 = build_symmetric_cubillage(4);
  const auto [lo, hi] = direction_boundaries(q4.config, 0);
  CHECK_THROWS_AS(symmetric_membrane_between(q4, lo, lo), BadInputError);
}

TEST_CASE("symmetric builder") {
  const auto q3 = build_symmetric_cubillage(3);
  REQUIRE(q3.cubes.size() == 1);
  CHECK(mu(q3.cubes[0]) == q3.cubes[0]);
  const auto q4 = build_symmetric_cubillage(4);
  CHECK(q4.cubes.size() == 4);
  CHECK(spectrum(q4).size() == 15);
  CHECK(is_symmetric_cubillage(q4));
  const auto q5 = build_symmetric_cubillage(5);
  CHECK(q5.cubes.size() == 10);
  CHECK(spectrum(q5).size() == 26);
  CHECK(is_symmetric_cubillage(q5));
  CHECK_THROWS_AS(build_symmetric_cubillage(9), ScaleLimitError);
}

TEST_CASE("reconstruction from spectra") {
  const auto all3 = all_subsets(3);
  const auto q = reconstruct_from_spectrum(all3, make_zonotope_config(3, false));
  CHECK(q.cubes == single_cube().cubes);
  const auto q4 = four_cubes();
  CHECK(reconstruct_from_spectrum(spectrum(q4), q4.config).cubes == q4.cubes);
  const auto all4 = all_subsets(4);
  CHECK_THROWS_AS(reconstruct_from_spectrum(all4, make_zonotope_config(4, false)), NotMaximalError);
}

TEST_CASE("spectrum and reconstruction are inverse") {
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto v = greedy_completion(n, Relation::chord(), {}, seed);
      const auto q = reconstruct_from_spectrum(v, make_zonotope_config(n, false));
      CHECK_FALSE(validate_cubillage(q).has_value());
      CHECK(sorted(spectrum(q)) == sorted(v));
    }
  }
  for (int n = 3; n <= 6; ++n) {
    const auto q = build_symmetric_cubillage(n);
    CHECK(reconstruct_from_spectrum(spectrum(q), q.config).cubes == q.cubes);
  }
}

TEST_CASE("expansion and contraction are inverse on fixtures") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& q : fixtures(n)) {
      for (int p = 1; p <= n + 1; ++p) {
        const Rational t = insertion_parameter(q.config, p);
        const auto [below, above] = direction_boundaries(q.config, t);
        for (const auto* side : {&below, &above}) {
          const auto e = expand_cubillage(q, p, strong_membrane(*side, t));
          CHECK_FALSE(validate_cubillage(e).has_value());
          CHECK(static_cast<int>(e.cubes.size()) == binom(n + 1, 3));
          CHECK(contract_cubillage(e, p).cubes == q.cubes);
        }
      }
    }
  }
}

TEST_CASE("two contractions commute") {
  for (const auto& q : fixtures(5)) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) {
        const auto ab = contract_cubillage(contract_cubillage(q, a), b - 1);
        const auto ba = contract_cubillage(contract_cubillage(q, b), a);
        CHECK(ab.cubes == ba.cubes);
        CHECK_FALSE(validate_cubillage(ab).has_value());
      }
    }
  }
}

}  // TEST_SUITE
