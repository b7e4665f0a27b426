#include <doctest.h>

#include "sepsym/collections.hpp"
#include "sepsym/combi.hpp"
#include "sepsym/cubillage.hpp"
#include "sepsym/errors.hpp"
#include "sepsym/io.hpp"

using namespace sepsym;

namespace {

ColorSet S(int n, std::initializer_list<int> c) { return ColorSet(n, c); }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("color sets are sorted label arrays") {
  CHECK(to_json(S(4, {3, 1})).dump() == "[1,3]");
  CHECK(to_json(ColorSet(4)).dump() == "[]");
  CHECK(colorset_from_json(json::parse("[3,1]"), 4) == S(4, {1, 3}));
  CHECK_THROWS_AS(colorset_from_json(json::parse("[5]"), 4), BadInputError);
  CHECK_THROWS_AS(colorset_from_json(json::parse("[\"a\"]"), 4), BadInputError);
  CHECK_THROWS_AS(colorset_from_json(json::parse("{}"), 4), BadInputError);
}

TEST_CASE("collections round-trip") {
  const auto c = greedy_symmetric_completion(SymCollection(4, Relation::chord()));
  const json j = to_json(c);
  CHECK(j.at("n") == 4);
  CHECK(j.at("relation") == "chord");
  CHECK(j.at("size") == 15);
  CHECK(collection_from_json(j) == c);
  CHECK(collection_from_json(j.at("members"), 4, Relation::chord()) == c);
  CHECK_THROWS_AS(collection_from_json(j.at("members")), BadInputError);
  CHECK_THROWS_AS(collection_from_json(json::parse("{\"n\":3}")), BadInputError);
}

TEST_CASE("purity report layout") {
  const json j = to_json(purity_report(4, Relation::weak(), Domain::full()));
  CHECK(j.at("n") == 4);
  CHECK(j.at("relation") == "weak");
  CHECK(j.at("domain") == "full");
  CHECK(j.at("count") == 4);
  CHECK(j.at("sizes").at("11") == 4);
  CHECK(j.at("pure") == true);
  CHECK(j.at("target") == 11);
  const json k3 = to_json(purity_report(4, Relation::k_separated(3), Domain::full()));
  CHECK(k3.at("target").is_null());
  CHECK(k3.at("relation") == "k=3");
}

TEST_CASE("tilings round-trip") {
  const auto w = greedy_completion(4, Relation::weak(), {});
  const auto k = reconstruct_ftq_combi(w, make_zonogon_config(4, false));
  const json j = to_json(k);
  CHECK(j.at("tiles").at(0).contains("apex_or_root"));
  CHECK(j.at("tiles").at(0).contains("kind"));
  const auto back = combi_from_json(j);
  CHECK(back.tiles == k.tiles);
  CHECK(back.config.n == 4);
  CHECK_FALSE(validate_ftq_combi(back).has_value());
  CHECK(to_json(back) == j);

  json bad = j;
  bad["tiles"][0]["kind"] = "hexagon";
  CHECK_THROWS(combi_from_json(bad));
}

TEST_CASE("cubillages round-trip") {
  const auto q = build_symmetric_cubillage(5);
  const json j = to_json(q);
  CHECK(j.at("cubes").size() == 10);
  const auto back = cubillage_from_json(j);
  CHECK(back.cubes == q.cubes);
  CHECK(back.symmetric);
  CHECK_FALSE(validate_cubillage(back).has_value());

  json bad = j;
  bad["cubes"][0]["type"] = json::array({1, 2});
  CHECK_THROWS_AS(cubillage_from_json(bad), BadInputError);
}

TEST_CASE("membranes round-trip") {
  const auto q = build_symmetric_cubillage(4);
  const auto m = build_Ndiam(q);
  const json j = to_json(m);
  CHECK(j.at("kind") == "weak");
  CHECK_FALSE(j.contains("direction"));
  const auto back = membrane_from_json(j, 4);
  CHECK(back.items == m.items);

  const auto [lo, hi] = direction_boundaries(q.config, Rational(-1, 2));
  const auto s = strong_membrane(lo, Rational(-1, 2));
  const json js = to_json(s);
  CHECK(js.at("direction") == "-1/2");
  const auto sb = membrane_from_json(js, 4);
  CHECK(sb.kind == MembraneKind::strong);
  CHECK(sb.direction == Rational(-1, 2));
  CHECK(sb.items == s.items);
}

TEST_CASE("diagnostics and dumps") {
  const json d = to_json(Diagnostic{"TripleMissing", "type 123"});
  CHECK(d.at("kind") == "TripleMissing");
  CHECK(d.at("detail") == "type 123");
  const json a = to_json(build_symmetric_cubillage(4));
  CHECK(dump(a) == dump(a));
  CHECK(dump(a).back() == '\n');
}

}  // TEST_SUITE
