#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sepsym/collections.hpp"
#include "sepsym/combi.hpp"
#include "sepsym/cubillage.hpp"

using namespace sepsym;

namespace {

constexpr std::uint64_t kSeed = 0x5e95e9;

ColorSet random_set(std::mt19937_64& gen, int n) { return ColorSet(n, gen() & ColorSet::full(n).bits()); }

std::vector<ColorSet> sorted(std::vector<ColorSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("random pairs: fast predicates match the pattern oracle for n up to 12") {
  std::mt19937_64 gen(kSeed);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 12);
    const ColorSet a = random_set(gen, n), b = random_set(gen, n);
    CHECK(is_strongly_separated(a, b) == oracle::strong(a, b));
    CHECK(is_weakly_separated(a, b) == oracle::weak(a, b));
    CHECK(is_chord_separated(a, b) == oracle::chord(a, b));
    const int k = 1 + static_cast<int>(gen() % 5);
    CHECK(is_k_separated(a, b, k) == oracle::k_sep(a, b, k));
  }
}

TEST_CASE("non-symmetric greedy completion always reaches the maximum size") {
  std::mt19937_64 gen(kSeed + 1);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::uint64_t seed = gen();
      const auto w = greedy_completion(n, Relation::weak(), {}, seed);
      CHECK(static_cast<std::int64_t>(w.size()) == s_n(n));
      const auto s = greedy_completion(n, Relation::strong(), {}, seed);
      CHECK(static_cast<std::int64_t>(s.size()) == s_n(n));
      const auto c = greedy_completion(n, Relation::chord(), {}, seed);
      CHECK(static_cast<std::int64_t>(c.size()) == c_n(n));
    }
  }
}

TEST_CASE("greedy completion is reproducible from its seed") {
  for (std::uint64_t seed : {1ULL, 99ULL, 123456789ULL}) {
    CompletionOptions opts;
    opts.seed = seed;
    const SymCollection empty(6, Relation::chord());
    CHECK(greedy_symmetric_completion(empty, opts) == greedy_symmetric_completion(empty, opts));
    CHECK(greedy_completion(6, Relation::weak(), {}, seed) == greedy_completion(6, Relation::weak(), {}, seed));
  }
}

TEST_CASE("completion keeps any valid seed and stays maximal") {
  std::mt19937_64 gen(kSeed + 2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 4);
    std::vector<ColorSet> seed;
    for (int tries = 0; tries < 6; ++tries) {
      const ColorSet a = random_set(gen, n);
      std::vector<ColorSet> grown = seed;
      grown.push_back(a);
      if (oracle::pairwise(grown, oracle::Rel::weak)) seed = grown;
    }
    const auto w = greedy_completion(n, Relation::weak(), seed, gen());
    for (const auto& a : seed) CHECK(std::find(w.begin(), w.end(), a) != w.end());
    CHECK(oracle::pairwise(w, oracle::Rel::weak));
    CHECK(oracle::maximal_in(w, oracle::Rel::weak, oracle::power_set(n)));
  }
}

TEST_CASE("random maximal weak collections tile and round-trip at n = 6") {
  std::mt19937_64 gen(kSeed + 3);
  const auto cfg = make_zonogon_config(6, false);
  for (int trial = 0; trial < 8; ++trial) {
    const auto w = greedy_completion(6, Relation::weak(), {}, gen());
    const auto k = reconstruct_ftq_combi(w, cfg);
    CHECK_FALSE(validate_ftq_combi(k).has_value());
    CHECK(sorted(k.vertex_set()) == sorted(w));
  }
}

TEST_CASE("random maximal chord collections give valid cubillages at n = 6") {
  std::mt19937_64 gen(kSeed + 4);
  const auto cfg = make_zonotope_config(6, false);
  for (int trial = 0; trial < 5; ++trial) {
    const auto v = greedy_completion(6, Relation::chord(), {}, gen());
    const auto q = reconstruct_from_spectrum(v, cfg);
    CHECK_FALSE(validate_cubillage(q).has_value());
    CHECK(sorted(spectrum(q)) == sorted(v));
    for (int c = 1; c <= 6; ++c) {
      const auto pie = extract_pie(q, c);
      CHECK(pie.cubes.size() == 10);
      CHECK_FALSE(check_membrane(pie.membrane, q.config).has_value());
    }
  }
}

TEST_CASE("symmetric chord completions: levels follow h(n-h)+1") {
  std::mt19937_64 gen(kSeed + 5);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      CompletionOptions opts;
      opts.seed = gen();
      const auto c = greedy_symmetric_completion(SymCollection(n, Relation::chord()), opts);
      for (const auto& [h, count] : level_profile(c)) CHECK(count == h * (n - h) + 1);
    }
  }
}

TEST_CASE("reflection of tiles is an involution that preserves area") {
  for (int n = 2; n <= 6; n += 2) {
    const auto cfg = make_zonogon_config(n, true);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto w = greedy_completion(n, Relation::weak(), {}, seed);
      for (const auto& t : reconstruct_ftq_combi(w, cfg).tiles) {
        CHECK(t.reflected().reflected() == t);
        CHECK(tile_area(t.reflected(), cfg) == tile_area(t, cfg));
      }
    }
  }
}

TEST_CASE("mu is an involution on cubes and facets and preserves spectra of symmetric builds") {
  for (int n = 3; n <= 6; ++n) {
    const auto q = build_symmetric_cubillage(n);
    std::set<ColorSet> v;
    for (const auto& a : spectrum(q)) v.insert(a);
    for (const auto& c : q.cubes) {
      CHECK(mu(mu(c)) == c);
      for (const auto& [f, side] : cube_facets(c, q.config)) CHECK(mu(mu(f)) == f);
      for (const auto& a : c.vertices()) CHECK(v.count(k_involution(a)) == 1);
    }
  }
}

}  // TEST_SUITE
