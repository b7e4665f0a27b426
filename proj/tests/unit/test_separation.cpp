#include <doctest.h>

#include "oracles.hpp"
#include "sepsym/separation.hpp"

using namespace sepsym;

namespace {

ColorSet S(int n, std::initializer_list<int> c) { return ColorSet(n, c); }

}  // namespace

TEST_SUITE("separation") {

TEST_CASE("strong separation examples") {
  CHECK(is_strongly_separated(S(3, {1, 2}), S(3, {2, 3})));
  CHECK_FALSE(is_strongly_separated(S(3, {1, 3}), S(3, {2})));
  CHECK(is_strongly_separated(S(3, {2}), S(3, {1, 2, 3})));
}

TEST_CASE("chord separation examples") {
  CHECK_FALSE(is_chord_separated(S(4, {1, 3}), S(4, {2, 4})));
  CHECK(is_chord_separated(S(4, {1, 3}), S(4, {2})));
  CHECK(is_chord_separated(S(4, {1, 4}), S(4, {2, 3})));
}

TEST_CASE("weak separation examples") {
  CHECK_FALSE(is_weakly_separated(S(3, {1, 3}), S(3, {2})));
  CHECK(is_weakly_separated(S(4, {1, 4}), S(4, {2, 3})));
  CHECK_FALSE(is_weakly_separated(S(4, {1, 3}), S(4, {2, 4})));
}

TEST_CASE("k separation examples") {
  CHECK_FALSE(is_k_separated(S(5, {1, 3, 5}), S(5, {2, 4}), 3));
  CHECK(is_k_separated(S(5, {1, 3}), S(5, {2, 4}), 3));
  CHECK(is_k_separated(S(5, {1, 3, 5}), S(5, {2, 4}), 4));
  CHECK_THROWS(Relation::k_separated(0));
}

TEST_CASE("pairwise check and witness") {
  const std::vector<ColorSet> chain{ColorSet(2), S(2, {1}), S(2, {1, 2})};
  CHECK_FALSE(pairwise_separated(chain, Relation::weak()).has_value());
  CHECK_FALSE(pairwise_separated(std::vector<ColorSet>{}, Relation::chord()).has_value());

  const auto all = all_subsets(4);
  const auto w = pairwise_separated(all, Relation::chord());
  REQUIRE(w.has_value());
  CHECK(w->first == S(4, {1, 3}));
  CHECK(w->second == S(4, {2, 4}));
}

TEST_CASE("predicates agree with the brute-force pattern search") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = oracle::power_set(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        CHECK(is_strongly_separated(a, b) == oracle::strong(a, b));
        CHECK(is_chord_separated(a, b) == oracle::chord(a, b));
        CHECK(is_weakly_separated(a, b) == oracle::weak(a, b));
        for (int k = 1; k <= 4; ++k) CHECK(is_k_separated(a, b, k) == oracle::k_sep(a, b, k));
      }
    }
  }
}

TEST_CASE("low k coincides with strong and chord") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : all_subsets(n)) {
      for (const auto& b : all_subsets(n)) {
        CHECK(is_k_separated(a, b, 1) == is_strongly_separated(a, b));
        CHECK(is_k_separated(a, b, 2) == is_chord_separated(a, b));
      }
    }
  }
}

TEST_CASE("strong implies weak implies chord; all predicates symmetric") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : all_subsets(n)) {
      for (const auto& b : all_subsets(n)) {
        if (is_strongly_separated(a, b)) CHECK(is_weakly_separated(a, b));
        if (is_weakly_separated(a, b)) CHECK(is_chord_separated(a, b));
        CHECK(is_weakly_separated(a, b) == is_weakly_separated(b, a));
        CHECK(is_strongly_separated(a, b) == is_strongly_separated(b, a));
        CHECK(is_chord_separated(a, b) == is_chord_separated(b, a));
      }
    }
  }
}

TEST_CASE("separation commutes with the K-involution") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : all_subsets(n)) {
      for (const auto& b : all_subsets(n)) {
        const ColorSet as = k_involution(a), bs = k_involution(b);
        CHECK(is_strongly_separated(a, b) == is_strongly_separated(as, bs));
        CHECK(is_weakly_separated(a, b) == is_weakly_separated(as, bs));
        CHECK(is_chord_separated(a, b) == is_chord_separated(as, bs));
        CHECK(is_k_separated(a, b, 3) == is_k_separated(as, bs, 3));
      }
    }
  }
}

TEST_CASE("weak and chord coincide on equal sizes") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : all_subsets(n)) {
      for (const auto& b : all_subsets(n)) {
        if (a.size() == b.size()) CHECK(is_weakly_separated(a, b) == is_chord_separated(a, b));
      }
    }
  }
}

TEST_CASE("a set with at most one poor and one full pair is weakly separated from its image") {
  // Even n only: for odd n the middle color always sits in the difference.
  for (int n = 2; n <= 8; n += 2) {
    for (const auto& s : all_subsets(n)) {
      const auto p = classify_pairs(s);
      if (p.poor.size() <= 1 && p.full.size() <= 1) CHECK(is_weakly_separated(s, k_involution(s)));
    }
  }
}

TEST_CASE("equal sets are separated under every relation") {
  const ColorSet a = S(5, {1, 3, 5});
  for (const auto& r : {Relation::strong(), Relation::weak(), Relation::chord(), Relation::k_separated(3)}) {
    CHECK(separated(a, a, r));
  }
}

TEST_CASE("relation names round-trip") {
  for (const auto& r : {Relation::strong(), Relation::weak(), Relation::chord(), Relation::k_separated(3)}) {
    CHECK(Relation::parse(r.name()) == r);
  }
  CHECK_THROWS(Relation::parse("medium"));
}

}  // TEST_SUITE
