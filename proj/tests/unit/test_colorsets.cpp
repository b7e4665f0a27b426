#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sepsym/colorset.hpp"
#include "sepsym/errors.hpp"

using namespace sepsym;

namespace {

ColorSet S(int n, std::initializer_list<int> c) { return ColorSet(n, c); }

}  // namespace

TEST_SUITE("colorsets") {

TEST_CASE("color involution") {
  CHECK(color_involution(1, 4) == 4);
  CHECK(color_involution(2, 3) == 2);
  for (int n = 1; n <= 12; ++n) {
    for (int i = 1; i <= n; ++i) CHECK(color_involution(color_involution(i, n), n) == i);
  }
}

TEST_CASE("k involution examples") {
  CHECK(k_involution(S(4, {1})) == S(4, {1, 2, 3}));
  CHECK(k_involution(S(4, {1, 2})) == S(4, {1, 2}));
  CHECK(k_involution(ColorSet(3)) == ColorSet::full(3));
}

TEST_CASE("k involution agrees with the literal definition and is an involution") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : oracle::power_set(n)) {
      const ColorSet s = k_involution(a);
      CHECK(s == oracle::star(a));
      CHECK(k_involution(s) == a);
      CHECK(s.size() == n - a.size());
    }
  }
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 7 + static_cast<int>(gen() % 6);
    const ColorSet a(n, gen() & ColorSet::full(n).bits());
    CHECK(k_involution(k_involution(a)) == a);
  }
}

TEST_CASE("classify pairs examples") {
  auto p = classify_pairs(S(4, {1}));
  CHECK(p.poor == std::vector<ColorPair>{{2, 3}});
  CHECK(p.ordinary == std::vector<ColorPair>{{1, 4}});
  CHECK(p.full.empty());

  p = classify_pairs(S(4, {1, 2}));
  CHECK(p.ordinary == std::vector<ColorPair>{{1, 4}, {2, 3}});
  CHECK(p.poor.empty());
  CHECK(p.full.empty());

  p = classify_pairs(S(3, {2}));
  CHECK(p.poor == std::vector<ColorPair>{{1, 3}});
  CHECK(p.middle == MiddleState::full);
  CHECK(classify_pairs(ColorSet(4)).middle == MiddleState::absent);
}

TEST_CASE("pair profile partitions the pairs and counts the set") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& a : all_subsets(n)) {
      const auto p = classify_pairs(a);
      CHECK(static_cast<int>(p.poor.size() + p.ordinary.size() + p.full.size()) == n / 2);
      const int mid = p.middle == MiddleState::full ? 1 : 0;
      CHECK(static_cast<int>(p.ordinary.size() + 2 * p.full.size()) + mid == a.size());
    }
  }
}

TEST_CASE("involution swaps poor and full pairs and keeps ordinary ones stable") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& a : all_subsets(n)) {
      const ColorSet s = k_involution(a);
      const auto p = classify_pairs(a);
      const auto q = classify_pairs(s);
      CHECK(p.poor == q.full);
      CHECK(p.full == q.poor);
      CHECK(p.ordinary == q.ordinary);
      for (const auto& [i, j] : p.ordinary) {
        const int inside = a.contains(i) ? i : j;
        CHECK(s.contains(inside));
      }
    }
  }
}

TEST_CASE("set shape") {
  CHECK(set_shape(S(4, {2, 3})) == SetShape::interval);
  CHECK(set_shape(S(4, {1, 4})) == SetShape::cointerval);
  CHECK(set_shape(S(4, {1, 3})) == SetShape::neither);
  CHECK(set_shape(ColorSet(4)) == SetShape::both);
  CHECK(set_shape(ColorSet::full(4)) == SetShape::both);
  CHECK(set_shape(S(4, {1, 2})) == SetShape::both);
}

TEST_CASE("order predicates") {
  auto o = order_predicates(S(4, {1, 2}), S(4, {3, 4}));
  CHECK(o.less);
  o = order_predicates(S(4, {1, 4}), S(4, {2, 3}));
  CHECK(o.a_surrounds_b);
  CHECK_FALSE(o.b_surrounds_a);
  o = order_predicates(ColorSet(1), S(1, {1}));
  CHECK(o.less);
  CHECK_FALSE(o.a_surrounds_b);
}

TEST_CASE("surround agrees with the literal definition") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = oracle::power_set(n);
    for (const auto& a : all) {
      for (const auto& b : all) CHECK(order_predicates(a, b).a_surrounds_b == oracle::surrounds(a, b));
    }
  }
}

TEST_CASE("symmetrized labels") {
  const GroundSet odd(5);
  CHECK(odd.to_symmetrized(3) == 0);
  CHECK(odd.to_symmetrized(1) == -2);
  const GroundSet even(4);
  CHECK(even.to_symmetrized(1) == -2);
  CHECK(even.to_symmetrized(3) == 1);
  for (int n = 1; n <= 9; ++n) {
    const GroundSet g(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(g.from_symmetrized(g.to_symmetrized(i)) == i);
      CHECK(g.to_symmetrized(g.mirror(i)) == -g.to_symmetrized(i));
    }
  }
}

TEST_CASE("ground set mismatch is a checked failure") {
  CHECK_THROWS_AS(S(3, {1}) | S(4, {1}), GroundSetMismatch);
  CHECK_THROWS(GroundSet(0));
}

TEST_CASE("canonical order is size first then lexicographic") {
  CHECK(S(3, {3}) < S(3, {1, 2}));
  CHECK(S(3, {1, 3}) < S(3, {2, 3}));
  CHECK(ColorSet(3) < S(3, {1}));
  CHECK(S(3, {1, 3}).to_string() == "{1,3}");
}

}  // TEST_SUITE
