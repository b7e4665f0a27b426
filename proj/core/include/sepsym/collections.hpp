#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sepsym/colorset.hpp"
#include "sepsym/separation.hpp"

namespace sepsym {

enum class DomainKind { full, middle_level, lambda_nk, lambda_J };

// The part of 2^[n] a collection is allowed to live in.
struct Domain {
  DomainKind kind = DomainKind::full;
  int k = 0;              // lambda_nk
  std::vector<int> levels;  // lambda_J, ascending

  static Domain full() { return {}; }
  static Domain middle_level() { return {DomainKind::middle_level, 0, {}}; }
  static Domain lambda_nk(int k) { return {DomainKind::lambda_nk, k, {}}; }
  static Domain lambda_J(std::vector<int> levels);

  // Throws DomainError when the domain makes no sense over [n].
  void check(int n) const;
  bool contains(const ColorSet& a) const;

  // "full", "middle", "lambda:1", "levels:0,2,4".
  std::string name() const;
  static Domain parse(const std::string& text);

  friend bool operator==(const Domain&, const Domain&) = default;
};

inline std::int64_t s_n(int n) { return static_cast<std::int64_t>(n) * (n + 1) / 2 + 1; }
std::int64_t c_n(int n);

// Common size of all maximal symmetric collections, where it is known in closed form.
// Throws UnsupportedError otherwise.
std::int64_t target_size(int n, const Relation& r, const Domain& d);
std::optional<std::int64_t> try_target_size(int n, const Relation& r, const Domain& d);

// A symmetric collection: members are kept sorted in canonical order.
class SymCollection {
 public:
  SymCollection(int n, Relation relation);
  SymCollection(int n, Relation relation, std::vector<ColorSet> members);

  int n() const noexcept { return n_; }
  const Relation& relation() const noexcept { return relation_; }
  const std::vector<ColorSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const ColorSet& a) const;

  // First violated invariant (closure under A -> A*, pairwise separation,
  // ground set), or nullopt.
  std::optional<std::string> check() const;

  friend bool operator==(const SymCollection&, const SymCollection&) = default;

 private:
  int n_;
  Relation relation_;
  std::vector<ColorSet> members_;
};

// Default caps on n for exhaustive work.
int default_scale_limit(const Relation& r);

struct Orbit {
  ColorSet rep;   // the canonically smaller of A, A*
  ColorSet dual;  // A*; equal to rep for self-symmetric orbits
  int weight() const { return rep == dual ? 1 : 2; }
};

struct OrbitGraph {
  int n = 0;
  Relation relation;
  Domain domain;
  std::vector<Orbit> orbits;
  std::vector<boost::dynamic_bitset<>> adjacency;

  bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a].test(b); }
  std::vector<ColorSet> members_of(const boost::dynamic_bitset<>& nodes) const;
};

// Throws ScaleLimitError when n exceeds `scale_limit` (0 = default cap).
OrbitGraph build_orbit_graph(int n, const Relation& r, const Domain& d, int scale_limit = 0);

struct CompletionOptions {
  Domain domain = Domain::full();
  // When set, candidates are tried in a shuffled order derived from the seed.
  std::optional<std::uint64_t> seed;
};

// Adds orbits to `seed` one at a time while the result stays a symmetric
// collection. Throws InvalidSeedError on a bad seed.
SymCollection greedy_symmetric_completion(const SymCollection& seed, const CompletionOptions& opts = {});

// Non-symmetric counterpart: a maximal collection containing `seed`.
std::vector<ColorSet> greedy_completion(int n, const Relation& r, std::span<const ColorSet> seed,
                                        std::optional<std::uint64_t> order_seed = std::nullopt);

struct PurityReport {
  int n = 0;
  Relation relation;
  Domain domain;
  std::map<std::int64_t, std::int64_t> sizes;  // size -> number of collections
  std::int64_t count = 0;
  std::optional<std::int64_t> target;

  bool pure() const { return sizes.size() <= 1; }
  // Pure, and every size equals the target when there is one.
  bool matches_target() const;
};

struct EnumerateOptions {
  int threads = 1;
  int scale_limit = 0;
};

using CollectionVisitor = std::function<void(const SymCollection&)>;

// Visits every inclusion-maximal symmetric collection exactly once, in a
// deterministic order that does not depend on the thread count.
PurityReport enumerate_maximal_symmetric(int n, const Relation& r, const Domain& d, const EnumerateOptions& opts,
                                         const CollectionVisitor& visit);
PurityReport purity_report(int n, const Relation& r, const Domain& d, const EnumerateOptions& opts = {});

// Maximal cliques of an orbit graph, as node sets.
void enumerate_maximal_cliques(const OrbitGraph& g, int threads,
                               const std::function<void(const boost::dynamic_bitset<>&)>& visit);

std::map<int, int> level_profile(std::span<const ColorSet> members);
inline std::map<int, int> level_profile(const SymCollection& c) { return level_profile(c.members()); }

// Odd n = 2m+1: drop the middle color from every member and relabel down.
SymCollection contract_odd(const SymCollection& c);
// Inverse of contract_odd on maximal inputs: sets strictly below the middle
// line stay, sets strictly above gain the middle color, sets on it do both.
SymCollection expand_odd(const SymCollection& d);

// Intervals of size >= n/2+k together with co-intervals of size <= n/2-k.
std::vector<ColorSet> lambda_boundary_sets(int n, int k);
// S together with lambda_boundary_sets; maximal in 2^[n] iff S is maximal in
// the lambda domain.
SymCollection lambda_closure(const SymCollection& s, int k);

}  // namespace sepsym
