#include "sepsym/collections.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "sepsym/errors.hpp"
#include "sepsym/zonogon.hpp"

namespace sepsym {

using Bits = boost::dynamic_bitset<>;

Domain Domain::lambda_J(std::vector<int> levels) {
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return {DomainKind::lambda_J, 0, std::move(levels)};
}

void Domain::check(int n) const {
  switch (kind) {
    case DomainKind::full:
      return;
    case DomainKind::middle_level:
      if (n % 2 != 0) throw DomainError("the middle level needs an even number of colors");
      return;
    case DomainKind::lambda_nk:
      if (n % 2 != 0) throw DomainError("lambda domains need an even number of colors");
      if (k < 0 || 2 * k >= n) throw DomainError("lambda:k needs 0 <= k < n/2");
      return;
    case DomainKind::lambda_J:
      for (int level : levels) {
        if (level < 0 || level > n) throw DomainError("level " + std::to_string(level) + " outside [0..n]");
        if (!std::binary_search(levels.begin(), levels.end(), n - level)) {
          throw DomainError("level set is not symmetric: has " + std::to_string(level) + " but not " +
                            std::to_string(n - level));
        }
      }
      return;
  }
}

bool Domain::contains(const ColorSet& a) const {
  const int h = a.size();
  const int n = a.n();
  switch (kind) {
    case DomainKind::full:
      return true;
    case DomainKind::middle_level:
      return 2 * h == n;
    case DomainKind::lambda_nk:
      return 2 * h >= n - 2 * k && 2 * h <= n + 2 * k;
    case DomainKind::lambda_J:
      return std::binary_search(levels.begin(), levels.end(), h);
  }
  return false;
}

std::string Domain::name() const {
  switch (kind) {
    case DomainKind::full:
      return "full";
    case DomainKind::middle_level:
      return "middle";
    case DomainKind::lambda_nk:
      return "lambda:" + std::to_string(k);
    case DomainKind::lambda_J: {
      std::string out = "levels:";
      for (std::size_t i = 0; i < levels.size(); ++i) out += (i ? "," : "") + std::to_string(levels[i]);
      return out;
    }
  }
  return "?";
}

Domain Domain::parse(const std::string& text) {
  if (text == "full") return full();
  if (text == "middle") return middle_level();
  try {
    if (text.rfind("lambda:", 0) == 0) return lambda_nk(std::stoi(text.substr(7)));
    if (text.rfind("levels:", 0) == 0) {
      std::vector<int> levels;
      std::stringstream ss(text.substr(7));
      std::string item;
      while (std::getline(ss, item, ',')) levels.push_back(std::stoi(item));
      return lambda_J(std::move(levels));
    }
  } catch (const std::logic_error&) {
    // fall through to the error below
  }
  throw DomainError("unknown domain '" + text + "'");
}

std::int64_t c_n(int n) {
  const std::int64_t m = n;
  return m * (m - 1) * (m - 2) / 6 + m * (m - 1) / 2 + m + 1;
}

namespace {

enum class Family { strong, weak, chord, other };

Family family(const Relation& r) {
  switch (r.kind) {
    case RelationKind::strong:
      return Family::strong;
    case RelationKind::weak:
      return Family::weak;
    case RelationKind::chord:
      return Family::chord;
    case RelationKind::k_separated:
      if (r.k == 1) return Family::strong;
      if (r.k == 2) return Family::chord;
      return Family::other;
  }
  return Family::other;
}

std::int64_t level_sum(int n, int lo, int hi) {
  std::int64_t total = 0;
  for (int h = lo; h <= hi; ++h) total += static_cast<std::int64_t>(h) * (n - h) + 1;
  return total;
}

}  // namespace

std::optional<std::int64_t> try_target_size(int n, const Relation& r, const Domain& d) {
  if (n < 1) return std::nullopt;
  d.check(n);
  const Family f = family(r);
  if (f == Family::other) return std::nullopt;
  switch (d.kind) {
    case DomainKind::full:
      if (f == Family::chord) return c_n(n);
      return n % 2 == 0 ? s_n(n) : s_n(n) - (n - 1) / 2;
    case DomainKind::middle_level:
      if (f == Family::strong) return std::nullopt;
      return static_cast<std::int64_t>(n) * n / 4 + 1;
    case DomainKind::lambda_nk: {
      if (f == Family::strong) return std::nullopt;
      if (f == Family::chord) return level_sum(n, n / 2 - d.k, n / 2 + d.k);
      // Intervals above the band and co-intervals below it are forced, and
      // there are (a+1)(a+2) of them with a = n/2 - k - 1.
      const std::int64_t a = n / 2 - d.k - 1;
      return s_n(n) - (a + 1) * (a + 2);
    }
    case DomainKind::lambda_J: {
      if (f != Family::chord) return std::nullopt;
      std::int64_t total = 0;
      for (int h : d.levels) total += level_sum(n, h, h);
      return total;
    }
  }
  return std::nullopt;
}

std::int64_t target_size(int n, const Relation& r, const Domain& d) {
  if (auto t = try_target_size(n, r, d)) return *t;
  throw UnsupportedError("no closed-form size for relation " + r.name() + " on domain " + d.name());
}

SymCollection::SymCollection(int n, Relation relation) : n_(GroundSet(n).size()), relation_(relation) {}

SymCollection::SymCollection(int n, Relation relation, std::vector<ColorSet> members)
    : n_(GroundSet(n).size()), relation_(relation), members_(std::move(members)) {
  for (const auto& a : members_) {
    if (a.n() != n_) throw GroundSetMismatch("member " + a.to_string() + " is over a different ground set");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SymCollection::contains(const ColorSet& a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::optional<std::string> SymCollection::check() const {
  for (const auto& a : members_) {
    if (!contains(k_involution(a))) {
      return "member " + a.to_string() + " present but its image " + k_involution(a).to_string() + " is missing";
    }
  }
  if (auto bad = pairwise_separated(members_, relation_)) {
    return "members " + bad->first.to_string() + " and " + bad->second.to_string() + " are not " +
           relation_.name() + " separated";
  }
  return std::nullopt;
}

int default_scale_limit(const Relation& r) {
  const Family f = family(r);
  return (f == Family::strong || f == Family::weak) ? 7 : 6;
}

std::vector<ColorSet> OrbitGraph::members_of(const Bits& nodes) const {
  std::vector<ColorSet> out;
  for (auto i = nodes.find_first(); i != Bits::npos; i = nodes.find_next(i)) {
    out.push_back(orbits[i].rep);
    if (orbits[i].dual != orbits[i].rep) out.push_back(orbits[i].dual);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Admissible orbits {A, A*} in canonical order of their smaller member.
std::vector<Orbit> admissible_orbits(int n, const Relation& r, const Domain& d) {
  std::vector<ColorSet> all = all_subsets(n);
  std::sort(all.begin(), all.end());
  std::vector<Orbit> out;
  for (const auto& a : all) {
    const ColorSet b = k_involution(a);
    if (b < a) continue;
    if (!d.contains(a) || !d.contains(b)) continue;
    if (!separated(a, b, r)) continue;
    out.push_back({a, b});
  }
  return out;
}

void check_scale(int n, const Relation& r, int scale_limit) {
  const int limit = scale_limit > 0 ? scale_limit : default_scale_limit(r);
  if (n > limit) {
    throw ScaleLimitError("n = " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit) +
                          " for " + r.name() + " separation");
  }
}

}  // namespace

OrbitGraph build_orbit_graph(int n, const Relation& r, const Domain& d, int scale_limit) {
  GroundSet g(n);
  d.check(n);
  check_scale(n, r, scale_limit);
  OrbitGraph out;
  out.n = n;
  out.relation = r;
  out.domain = d;
  out.orbits = admissible_orbits(n, r, d);
  const std::size_t k = out.orbits.size();
  out.adjacency.assign(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      // A~B and A~B* suffice: the involution carries them to A*~B* and A*~B.
      const Orbit& a = out.orbits[i];
      const Orbit& b = out.orbits[j];
      if (separated(a.rep, b.rep, r) && separated(a.rep, b.dual, r)) {
        out.adjacency[i].set(j);
        out.adjacency[j].set(i);
      }
    }
  }
  return out;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const OrbitGraph& g, const std::function<void(const Bits&)>& visit) : g_(g), visit_(visit) {}

  void run(Bits& r, Bits p, Bits x) {
    if (p.none()) {
      if (x.none()) visit_(r);
      return;
    }
    const Bits candidates = p - g_.adjacency[pivot(p, x)];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      r.set(v);
      run(r, p & g_.adjacency[v], x & g_.adjacency[v]);
      r.reset(v);
      p.reset(v);
      x.set(v);
    }
  }

  // Tomita pivot: the vertex of P u X with the most neighbours in P.
  std::size_t pivot(const Bits& p, const Bits& x) const {
    std::size_t best = Bits::npos;
    std::size_t best_count = 0;
    const Bits px = p | x;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      const std::size_t c = (p & g_.adjacency[u]).count();
      if (best == Bits::npos || c > best_count) {
        best = u;
        best_count = c;
      }
    }
    return best;
  }

 private:
  const OrbitGraph& g_;
  const std::function<void(const Bits&)>& visit_;
};

struct Branch {
  std::size_t v;
  Bits p;
  Bits x;
};

// The top level of the search unrolled into independent branches, so that
// branch t can run anywhere and still contribute its cliques in order.
std::vector<Branch> top_branches(const OrbitGraph& g) {
  const std::size_t k = g.orbits.size();
  std::vector<Branch> out;
  Bits p(k);
  p.set();
  Bits x(k);
  const std::function<void(const Bits&)> none = [](const Bits&) {};
  CliqueSearch s(g, none);
  const Bits candidates = p - g.adjacency[s.pivot(p, x)];
  for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
    out.push_back({v, p & g.adjacency[v], x & g.adjacency[v]});
    p.reset(v);
    x.set(v);
  }
  return out;
}

template <typename Work>
void run_branches(std::size_t count, int threads, Work work) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void enumerate_maximal_cliques(const OrbitGraph& g, int threads, const std::function<void(const Bits&)>& visit) {
  const std::size_t k = g.orbits.size();
  if (k == 0) {
    visit(Bits(0));
    return;
  }
  const std::vector<Branch> branches = top_branches(g);
  if (threads <= 1) {
    CliqueSearch s(g, visit);
    for (const auto& b : branches) {
      Bits r(k);
      r.set(b.v);
      s.run(r, b.p, b.x);
    }
    return;
  }
  std::vector<std::vector<Bits>> found(branches.size());
  run_branches(branches.size(), threads, [&](std::size_t i) {
    const std::function<void(const Bits&)> collect = [&found, i](const Bits& c) { found[i].push_back(c); };
    CliqueSearch s(g, collect);
    Bits r(k);
    r.set(branches[i].v);
    s.run(r, branches[i].p, branches[i].x);
  });
  for (const auto& list : found) {
    for (const auto& c : list) visit(c);
  }
}

bool PurityReport::matches_target() const {
  if (!pure()) return false;
  if (!target) return true;
  return sizes.empty() || sizes.begin()->first == *target;
}

namespace {

PurityReport empty_report(int n, const Relation& r, const Domain& d) {
  PurityReport rep;
  rep.n = n;
  rep.relation = r;
  rep.domain = d;
  rep.target = try_target_size(n, r, d);
  return rep;
}

std::int64_t clique_weight(const OrbitGraph& g, const Bits& c) {
  std::int64_t w = 0;
  for (auto i = c.find_first(); i != Bits::npos; i = c.find_next(i)) w += g.orbits[i].weight();
  return w;
}

}  // namespace

PurityReport enumerate_maximal_symmetric(int n, const Relation& r, const Domain& d, const EnumerateOptions& opts,
                                         const CollectionVisitor& visit) {
  const OrbitGraph g = build_orbit_graph(n, r, d, opts.scale_limit);
  PurityReport rep = empty_report(n, r, d);
  enumerate_maximal_cliques(g, opts.threads, [&](const Bits& c) {
    SymCollection col(n, r, g.members_of(c));
    ++rep.sizes[static_cast<std::int64_t>(col.size())];
    ++rep.count;
    if (visit) visit(col);
  });
  return rep;
}

PurityReport purity_report(int n, const Relation& r, const Domain& d, const EnumerateOptions& opts) {
  const OrbitGraph g = build_orbit_graph(n, r, d, opts.scale_limit);
  PurityReport rep = empty_report(n, r, d);
  const std::size_t k = g.orbits.size();
  if (k == 0) {
    rep.sizes[0] = 1;
    rep.count = 1;
    return rep;
  }
  // Counting only, so branches need not buffer their cliques.
  const std::vector<Branch> branches = top_branches(g);
  std::vector<std::map<std::int64_t, std::int64_t>> partial(branches.size());
  run_branches(branches.size(), opts.threads, [&](std::size_t i) {
    auto& sizes = partial[i];
    const std::function<void(const Bits&)> tally = [&](const Bits& c) { ++sizes[clique_weight(g, c)]; };
    CliqueSearch s(g, tally);
    Bits r(k);
    r.set(branches[i].v);
    s.run(r, branches[i].p, branches[i].x);
  });
  for (const auto& sizes : partial) {
    for (const auto& [size, count] : sizes) {
      rep.sizes[size] += count;
      rep.count += count;
    }
  }
  return rep;
}

namespace {

constexpr int kGreedyLimit = 22;

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
  boost::random::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(items[i - 1], items[pick(rng)]);
  }
}

bool compatible(const ColorSet& a, const std::vector<ColorSet>& members, const Relation& r) {
  return std::all_of(members.begin(), members.end(), [&](const ColorSet& m) { return separated(a, m, r); });
}

}  // namespace

SymCollection greedy_symmetric_completion(const SymCollection& seed, const CompletionOptions& opts) {
  const int n = seed.n();
  if (n > kGreedyLimit) throw ScaleLimitError("greedy completion is limited to n <= " + std::to_string(kGreedyLimit));
  opts.domain.check(n);
  if (auto bad = seed.check()) throw InvalidSeedError(*bad);
  for (const auto& a : seed.members()) {
    if (!opts.domain.contains(a)) throw InvalidSeedError("member " + a.to_string() + " lies outside the domain");
  }
  std::vector<Orbit> orbits = admissible_orbits(n, seed.relation(), opts.domain);
  if (opts.seed) seeded_shuffle(orbits, *opts.seed);
  std::vector<ColorSet> members = seed.members();
  for (const auto& o : orbits) {
    if (std::binary_search(seed.members().begin(), seed.members().end(), o.rep)) continue;
    if (!compatible(o.rep, members, seed.relation())) continue;
    members.push_back(o.rep);
    if (o.dual != o.rep) members.push_back(o.dual);
  }
  return SymCollection(n, seed.relation(), std::move(members));
}

std::vector<ColorSet> greedy_completion(int n, const Relation& r, std::span<const ColorSet> seed,
                                        std::optional<std::uint64_t> order_seed) {
  if (n > kGreedyLimit) throw ScaleLimitError("greedy completion is limited to n <= " + std::to_string(kGreedyLimit));
  std::vector<ColorSet> members(seed.begin(), seed.end());
  if (auto bad = pairwise_separated(members, r)) {
    throw InvalidSeedError("seed members " + bad->first.to_string() + " and " + bad->second.to_string() +
                           " are not " + r.name() + " separated");
  }
  std::vector<ColorSet> candidates = all_subsets(n);
  std::sort(candidates.begin(), candidates.end());
  if (order_seed) seeded_shuffle(candidates, *order_seed);
  std::set<ColorSet> present(members.begin(), members.end());
  for (const auto& a : candidates) {
    if (present.count(a) != 0) continue;
    if (!compatible(a, members, r)) continue;
    members.push_back(a);
    present.insert(a);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::map<int, int> level_profile(std::span<const ColorSet> members) {
  std::map<int, int> out;
  for (const auto& a : members) ++out[a.size()];
  return out;
}

namespace {

// Remove color c from [n], shifting larger colors down.
ColorSet drop_color(const ColorSet& a, int c) {
  const std::uint64_t low = a.bits() & ((std::uint64_t{1} << (c - 1)) - 1);
  const std::uint64_t high = (a.bits() >> c) << (c - 1);
  return ColorSet(a.n() - 1, low | high);
}

// Insert a fresh color at position c of [n+1], shifting colors >= c up.
ColorSet insert_color(const ColorSet& a, int c, bool member) {
  const std::uint64_t low = a.bits() & ((std::uint64_t{1} << (c - 1)) - 1);
  const std::uint64_t high = (a.bits() >> (c - 1)) << c;
  std::uint64_t bits = low | high;
  if (member) bits |= std::uint64_t{1} << (c - 1);
  return ColorSet(a.n() + 1, bits);
}

}  // namespace

SymCollection contract_odd(const SymCollection& c) {
  const GroundSet g(c.n());
  if (!g.is_odd()) throw ParityError("contract_odd needs an odd number of colors");
  if (g.size() == 1) throw ParityError("contract_odd needs at least three colors");
  for (const auto& a : c.members()) {
    if (!c.contains(k_involution(a))) throw InvalidSeedError("collection is not symmetric at " + a.to_string());
  }
  const int mid = g.middle_color();
  std::vector<ColorSet> out;
  for (const auto& a : c.members()) out.push_back(drop_color(a.without(mid), mid));
  return SymCollection(c.n() - 1, c.relation(), std::move(out));
}

SymCollection expand_odd(const SymCollection& d) {
  const int n = d.n();
  if (n % 2 != 0) throw ParityError("expand_odd needs an even number of colors");
  for (const auto& a : d.members()) {
    if (!d.contains(k_involution(a))) throw InvalidSeedError("collection is not symmetric at " + a.to_string());
  }
  const ZonogonConfig cfg = make_zonogon_config(n, true);
  const Rational ym = cfg.middle_height();
  const int mid = n / 2 + 1;
  std::vector<ColorSet> out;
  for (const auto& a : d.members()) {
    const Rational y = embed(a, cfg).y;
    if (y <= ym) out.push_back(insert_color(a, mid, false));
    if (y >= ym) out.push_back(insert_color(a, mid, true));
  }
  return SymCollection(n + 1, d.relation(), std::move(out));
}

std::vector<ColorSet> lambda_boundary_sets(int n, int k) {
  Domain::lambda_nk(k).check(n);
  const int big = n / 2 + k;
  std::vector<ColorSet> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + big - 1; b <= n; ++b) {
      const ColorSet iv = ColorSet::interval(n, a, b);
      out.push_back(iv);
      out.push_back(iv.complement());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SymCollection lambda_closure(const SymCollection& s, int k) {
  const int n = s.n();
  if (n % 2 != 0) throw ParityError("lambda domains need an even number of colors");
  const Domain d = Domain::lambda_nk(k);
  d.check(n);
  for (const auto& a : s.members()) {
    if (!d.contains(a)) throw DomainError("member " + a.to_string() + " lies outside lambda:" + std::to_string(k));
  }
  std::vector<ColorSet> members = s.members();
  for (const auto& a : lambda_boundary_sets(n, k)) members.push_back(a);
  return SymCollection(n, s.relation(), std::move(members));
}

}  // namespace sepsym
