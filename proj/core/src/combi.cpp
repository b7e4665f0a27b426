#include "sepsym/combi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "sepsym/errors.hpp"
#include "sepsym/separation.hpp"

namespace sepsym {

std::string to_string(TileKind k) {
  switch (k) {
    case TileKind::delta:
      return "delta";
    case TileKind::nabla:
      return "nabla";
    case TileKind::upper:
      return "upper";
    case TileKind::lower:
      return "lower";
  }
  return "?";
}

TileKind parse_tile_kind(const std::string& text) {
  if (text == "delta") return TileKind::delta;
  if (text == "nabla") return TileKind::nabla;
  if (text == "upper") return TileKind::upper;
  if (text == "lower") return TileKind::lower;
  throw BadInputError("unknown tile kind '" + text + "'");
}

std::vector<ColorSet> Tile::vertices() const {
  std::vector<ColorSet> out;
  switch (kind) {
    case TileKind::delta:
      out = {anchor.without(colors.at(1)), anchor.without(colors.at(0)), anchor};
      break;
    case TileKind::nabla:
      out = {anchor, anchor.with(colors.at(0)), anchor.with(colors.at(1))};
      break;
    case TileKind::upper:
      for (int c : colors) out.push_back(anchor.with(c));
      break;
    case TileKind::lower:
      for (auto it = colors.rbegin(); it != colors.rend(); ++it) out.push_back(anchor.without(*it));
      break;
  }
  return out;
}

namespace {

using Edge = std::pair<ColorSet, ColorSet>;

Edge make_edge(const ColorSet& a, const ColorSet& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

int rank(TileKind k) { return static_cast<int>(k); }

}  // namespace

std::vector<std::pair<ColorSet, ColorSet>> Tile::edges() const {
  const std::vector<ColorSet> v = vertices();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(make_edge(v[i], v[(i + 1) % v.size()]));
  return out;
}

Tile Tile::reflected() const {
  const int n = anchor.n();
  std::vector<int> mirrored;
  for (int c : colors) mirrored.push_back(n + 1 - c);
  std::sort(mirrored.begin(), mirrored.end());
  static constexpr TileKind dual[] = {TileKind::nabla, TileKind::delta, TileKind::lower, TileKind::upper};
  return {dual[rank(kind)], k_involution(anchor), mirrored};
}

bool Tile::operator<(const Tile& o) const {
  if (kind != o.kind) return rank(kind) < rank(o.kind);
  if (anchor != o.anchor) return anchor < o.anchor;
  return colors < o.colors;
}

namespace {

std::vector<ColorSet> with_boundary(int n, std::vector<ColorSet> v) {
  for (const auto& a : left_boundary(n)) v.push_back(a);
  for (const auto& a : right_boundary(n)) v.push_back(a);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<ColorSet> tile_vertices(const std::vector<Tile>& tiles) {
  std::vector<ColorSet> out;
  for (const auto& t : tiles) {
    for (const auto& v : t.vertices()) out.push_back(v);
  }
  return out;
}

std::vector<Edge> boundary_edges(int n) {
  std::vector<Edge> out;
  const auto left = left_boundary(n);
  const auto right = right_boundary(n);
  for (int i = 1; i <= n; ++i) {
    out.push_back(make_edge(left[i - 1], left[i]));
    out.push_back(make_edge(right[i - 1], right[i]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string edge_name(const Edge& e) { return e.first.to_string() + "-" + e.second.to_string(); }

std::string tile_name(const Tile& t) {
  std::string s = to_string(t.kind) + "(" + t.anchor.to_string() + "|";
  for (std::size_t i = 0; i < t.colors.size(); ++i) s += (i ? "," : "") + std::to_string(t.colors[i]);
  return s + ")";
}

}  // namespace

std::vector<ColorSet> FtqCombi::vertex_set() const { return with_boundary(config.n, tile_vertices(tiles)); }

std::vector<ColorSet> FineQuasiCombi::vertex_set() const { return with_boundary(config.n, tile_vertices(tiles)); }

std::vector<Point2> tile_polygon(const Tile& t, const ZonogonConfig& cfg) {
  std::vector<Point2> out;
  for (const auto& v : t.vertices()) out.push_back(embed(v, cfg));
  return out;
}

Rational tile_area(const Tile& t, const ZonogonConfig& cfg) {
  const std::vector<Point2> p = tile_polygon(t, cfg);
  Rational twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p[i], p[(i + 1) % p.size()]);
  if (twice < 0) twice = -twice;
  return twice / 2;
}

namespace {

std::optional<std::string> shape_error(const Tile& t, int n) {
  if (t.anchor.n() != n) return "anchor over a different ground set";
  const std::size_t want = t.is_semilens() ? 3 : 2;
  if (t.colors.size() != want) return "wrong number of colors";
  for (std::size_t i = 0; i < t.colors.size(); ++i) {
    const int c = t.colors[i];
    if (c < 1 || c > n) return "color " + std::to_string(c) + " out of range";
    if (i > 0 && t.colors[i - 1] >= c) return "colors not strictly increasing";
    const bool inside = t.anchor.contains(c);
    const bool need_inside = t.kind == TileKind::delta || t.kind == TileKind::lower;
    if (inside != need_inside) return "color " + std::to_string(c) + (need_inside ? " missing from" : " already in") + " anchor";
  }
  return std::nullopt;
}

Triangle2 triangle_of(const Tile& t, const ZonogonConfig& cfg) {
  const std::vector<Point2> p = tile_polygon(t, cfg);
  return {p[0], p[1], p[2]};
}

}  // namespace

std::optional<Diagnostic> validate_ftq_combi(const FtqCombi& k) {
  const int n = k.config.n;
  const ZonogonConfig& cfg = k.config;
  std::vector<Triangle2> tris;
  for (const auto& t : k.tiles) {
    if (auto err = shape_error(t, n)) return Diagnostic{"BadTile", tile_name(t) + ": " + *err};
    tris.push_back(triangle_of(t, cfg));
    if (orient_sign(tris.back()[0], tris.back()[1], tris.back()[2]) == 0) {
      return Diagnostic{"BadTile", tile_name(t) + ": degenerate triangle"};
    }
  }
  Rational total = 0;
  for (const auto& t : k.tiles) total += tile_area(t, cfg);
  if (total != cfg.area()) {
    return Diagnostic{"AreaMismatch", "tiles cover " + to_string(total) + " of " + to_string(cfg.area())};
  }
  for (std::size_t a = 0; a < tris.size(); ++a) {
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      if (interiors_overlap(tris[a], tris[b])) {
        return Diagnostic{"Overlap", tile_name(k.tiles[a]) + " and " + tile_name(k.tiles[b]) + " overlap at " +
                                         to_string(overlap_witness(tris[a], tris[b]))};
      }
    }
  }
  std::map<Edge, int> uses;
  for (const auto& t : k.tiles) {
    for (const auto& e : t.edges()) ++uses[e];
  }
  const std::vector<Edge> boundary = boundary_edges(n);
  if (!k.tiles.empty()) {
    for (const auto& e : boundary) {
      const int c = uses.count(e) ? uses[e] : 0;
      if (c != 1) {
        return Diagnostic{"BoundaryEdge", "boundary edge " + edge_name(e) + " covered " + std::to_string(c) + " times"};
      }
    }
  }
  for (const auto& [e, c] : uses) {
    if (std::binary_search(boundary.begin(), boundary.end(), e)) continue;
    if (c != 2) {
      return Diagnostic{"InternalEdge", "inner edge " + edge_name(e) + " shared by " + std::to_string(c) + " tiles"};
    }
  }
  const std::vector<ColorSet> v = k.vertex_set();
  if (auto bad = pairwise_separated(v, Relation::weak())) {
    return Diagnostic{"NotSeparated", bad->first.to_string() + " and " + bad->second.to_string()};
  }
  if (static_cast<std::int64_t>(v.size()) != s_n(n)) {
    return Diagnostic{"NotMaximal", std::to_string(v.size()) + " vertices, expected " + std::to_string(s_n(n))};
  }
  return std::nullopt;
}

FineQuasiCombi merge_semilenses(const FtqCombi& k, std::optional<std::uint64_t> order_seed) {
  std::vector<std::size_t> lens;
  for (std::size_t i = 0; i < k.tiles.size(); ++i) {
    if (k.tiles[i].is_semilens()) lens.push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < lens.size(); ++a) {
    const Tile& s = k.tiles[lens[a]];
    const auto se = s.edges();
    for (std::size_t b = a + 1; b < lens.size(); ++b) {
      const Tile& t = k.tiles[lens[b]];
      if (s.kind != t.kind) continue;
      const auto te = t.edges();
      const bool share = std::any_of(se.begin(), se.end(),
                                     [&](const Edge& e) { return std::find(te.begin(), te.end(), e) != te.end(); });
      if (share) pairs.emplace_back(a, b);
    }
  }
  if (order_seed) {
    boost::random::mt19937_64 rng(*order_seed);
    for (std::size_t i = pairs.size(); i > 1; --i) {
      boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
      std::swap(pairs[i - 1], pairs[pick(rng)]);
    }
  }
  std::vector<std::size_t> parent(lens.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : pairs) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  FineQuasiCombi out{k.config, {}, k.symmetric};
  std::map<std::size_t, Tile> merged;
  for (std::size_t a = 0; a < lens.size(); ++a) {
    const Tile& t = k.tiles[lens[a]];
    auto [it, fresh] = merged.try_emplace(find(a), t);
    if (fresh) continue;
    if (it->second.anchor != t.anchor) throw std::logic_error("adjacent semi-lenses with different roots");
    for (int c : t.colors) it->second.colors.push_back(c);
  }
  for (const auto& t : k.tiles) {
    if (!t.is_semilens()) out.tiles.push_back(t);
  }
  for (auto& [root, t] : merged) {
    std::sort(t.colors.begin(), t.colors.end());
    t.colors.erase(std::unique(t.colors.begin(), t.colors.end()), t.colors.end());
    out.tiles.push_back(t);
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  return out;
}

FtqCombi refine_fan(const FineQuasiCombi& q) {
  FtqCombi out{q.config, {}, q.symmetric};
  for (const auto& t : q.tiles) {
    if (!t.is_semilens() || t.colors.size() == 3) {
      out.tiles.push_back(t);
      continue;
    }
    const auto& c = t.colors;
    const std::size_t r = c.size();
    if (t.kind == TileKind::upper) {
      // leftmost vertex X+c_1
      for (std::size_t p = 1; p + 1 < r; ++p) out.tiles.push_back({t.kind, t.anchor, {c[0], c[p], c[p + 1]}});
    } else {
      // leftmost vertex Y-c_r
      for (std::size_t p = 0; p + 2 < r; ++p) out.tiles.push_back({t.kind, t.anchor, {c[p], c[p + 1], c[r - 1]}});
    }
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  return out;
}

namespace {

// Every merged upper semi-lens must close up against a merged lower
// semi-lens along the same long edge, and vice versa. Tilings failing this
// cut a lens the wrong way and do not come from a combi.
bool lenses_paired(const FineQuasiCombi& q) {
  std::multiset<Edge> upper;
  std::multiset<Edge> lower;
  for (const auto& t : q.tiles) {
    if (!t.is_semilens()) continue;
    const auto v = t.vertices();
    (t.kind == TileKind::upper ? upper : lower).insert(make_edge(v.front(), v.back()));
  }
  return upper == lower;
}

struct Candidate {
  Tile tile;
  Triangle2 tri;
  std::array<int, 3> slots{};
};

class TilingSearch {
 public:
  TilingSearch(std::vector<ColorSet> w, const ZonogonConfig& cfg) : w_(std::move(w)), cfg_(cfg) {
    for (const auto& a : w_) points_.push_back(embed(a, cfg_));
    build_candidates();
    build_boundary();
  }

  std::optional<FtqCombi> run() {
    if (search()) return result_;
    return std::nullopt;
  }

 private:
  int edge_id(const Edge& e) {
    auto [it, fresh] = edges_.try_emplace(e, static_cast<int>(edges_.size()));
    return it->second;
  }

  Point2 point(const ColorSet& a) const { return embed(a, cfg_); }

  void add_candidate(const Tile& t) {
    const std::vector<ColorSet> v = t.vertices();
    Candidate c{t, {point(v[0]), point(v[1]), point(v[2])}, {}};
    if (orient_sign(c.tri[0], c.tri[1], c.tri[2]) == 0) return;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (std::find(v.begin(), v.end(), w_[i]) != v.end()) continue;
      const Point2& p = points_[i];
      if (p == c.tri[0] || p == c.tri[1] || p == c.tri[2]) continue;
      if (in_closed_triangle(p, c.tri)) return;
    }
    for (int e = 0; e < 3; ++e) {
      const int a = e;
      const int b = (e + 1) % 3;
      const int third = (e + 2) % 3;
      const Edge key = make_edge(v[a], v[b]);
      const Point2 pa = point(key.first);
      const Point2 pb = point(key.second);
      c.slots[e] = 2 * edge_id(key) + (orient_sign(pa, pb, c.tri[third]) > 0 ? 1 : 0);
    }
    cands_.push_back(std::move(c));
  }

  void build_candidates() {
    const int n = cfg_.n;
    std::set<ColorSet> in_w(w_.begin(), w_.end());
    std::vector<Tile> tiles;
    std::map<ColorSet, std::vector<int>> up_roots;
    std::map<ColorSet, std::vector<int>> down_roots;
    for (const auto& a : w_) {
      for (int c = 1; c <= n; ++c) {
        if (a.contains(c)) {
          up_roots[a.without(c)].push_back(c);
        } else {
          down_roots[a.with(c)].push_back(c);
        }
      }
    }
    for (const auto& a : w_) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (a.contains(i) && a.contains(j) && in_w.count(a.without(i)) && in_w.count(a.without(j))) {
            tiles.push_back({TileKind::delta, a, {i, j}});
          }
          if (!a.contains(i) && !a.contains(j) && in_w.count(a.with(i)) && in_w.count(a.with(j))) {
            tiles.push_back({TileKind::nabla, a, {i, j}});
          }
        }
      }
    }
    auto triples = [&](const std::map<ColorSet, std::vector<int>>& roots, TileKind kind) {
      for (const auto& [root, cs] : roots) {
        std::vector<int> c = cs;
        std::sort(c.begin(), c.end());
        for (std::size_t a = 0; a < c.size(); ++a) {
          for (std::size_t b = a + 1; b < c.size(); ++b) {
            for (std::size_t d = b + 1; d < c.size(); ++d) tiles.push_back({kind, root, {c[a], c[b], c[d]}});
          }
        }
      }
    };
    triples(up_roots, TileKind::upper);
    triples(down_roots, TileKind::lower);
    // Deterministic order: leftmost vertex, kind, colors.
    auto leftmost = [&](const Tile& t) {
      std::pair<Rational, ColorSet> best{0, ColorSet(n)};
      bool first = true;
      for (const auto& v : t.vertices()) {
        const Rational x = point(v).x;
        if (first || x < best.first || (x == best.first && v < best.second)) best = {x, v};
        first = false;
      }
      return best;
    };
    std::stable_sort(tiles.begin(), tiles.end(), [&](const Tile& a, const Tile& b) {
      const auto la = leftmost(a);
      const auto lb = leftmost(b);
      if (la.first != lb.first) return la.first < lb.first;
      if (la.second != lb.second) return la.second < lb.second;
      if (a.kind != b.kind) return rank(a.kind) < rank(b.kind);
      return a.colors < b.colors;
    });
    for (const auto& t : tiles) add_candidate(t);
  }

  void build_boundary() {
    const Point2 center = cfg_.center();
    for (const auto& e : boundary_edges(cfg_.n)) {
      const int id = edge_id(e);
      const int inner = orient_sign(point(e.first), point(e.second), center) > 0 ? 1 : 0;
      forbidden_.insert(2 * id + (1 - inner));
      open_.insert(2 * id + inner);
    }
    by_slot_.assign(2 * edges_.size(), {});
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      for (int s : cands_[i].slots) by_slot_[static_cast<std::size_t>(s)].push_back(i);
    }
  }

  bool viable(std::size_t ci) const {
    const Candidate& c = cands_[ci];
    for (int s : c.slots) {
      if (used_.count(s) || forbidden_.count(s)) return false;
    }
    for (std::size_t p : placed_) {
      if (interiors_overlap(c.tri, cands_[p].tri)) return false;
    }
    return true;
  }

  bool search() {
    if (open_.empty()) return finish();
    int best_slot = -1;
    std::vector<std::size_t> best;
    for (int s : open_) {
      std::vector<std::size_t> fit;
      for (std::size_t ci : by_slot_[static_cast<std::size_t>(s)]) {
        if (viable(ci)) fit.push_back(ci);
      }
      if (best_slot < 0 || fit.size() < best.size()) {
        best_slot = s;
        best = std::move(fit);
        if (best.empty()) return false;
      }
    }
    for (std::size_t ci : best) {
      const std::set<int> saved_open = open_;
      const Candidate& c = cands_[ci];
      for (int s : c.slots) {
        used_.insert(s);
        open_.erase(s);
      }
      for (int s : c.slots) {
        const int opp = s ^ 1;
        if (!used_.count(opp) && !forbidden_.count(opp)) open_.insert(opp);
      }
      placed_.push_back(ci);
      if (search()) return true;
      placed_.pop_back();
      for (int s : c.slots) used_.erase(s);
      open_ = saved_open;
    }
    return false;
  }

  bool finish() {
    FtqCombi raw{cfg_, {}, false};
    for (std::size_t ci : placed_) raw.tiles.push_back(cands_[ci].tile);
    if (raw.vertex_set() != w_) return false;
    const FineQuasiCombi merged = merge_semilenses(raw);
    if (!lenses_paired(merged)) return false;
    FtqCombi fine = refine_fan(merged);
    if (validate_ftq_combi(fine)) return false;
    result_ = std::move(fine);
    return true;
  }

  std::vector<ColorSet> w_;
  const ZonogonConfig& cfg_;
  std::vector<Point2> points_;
  std::map<Edge, int> edges_;
  std::vector<Candidate> cands_;
  std::vector<std::vector<std::size_t>> by_slot_;
  std::set<int> forbidden_;
  std::set<int> open_;
  std::set<int> used_;
  std::vector<std::size_t> placed_;
  FtqCombi result_;
};

}  // namespace

FtqCombi reconstruct_ftq_combi(std::span<const ColorSet> w, const ZonogonConfig& cfg) {
  const int n = cfg.n;
  std::vector<ColorSet> sorted(w.begin(), w.end());
  for (const auto& a : sorted) {
    if (a.n() != n) throw GroundSetMismatch("collection and zonogon over different ground sets");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<std::int64_t>(sorted.size()) != s_n(n)) {
    throw NotMaximalError("collection has " + std::to_string(sorted.size()) + " sets, a maximal one has " +
                          std::to_string(s_n(n)));
  }
  if (auto bad = pairwise_separated(sorted, Relation::weak())) {
    throw NotMaximalError(bad->first.to_string() + " and " + bad->second.to_string() + " are not weakly separated");
  }
  if (n == 1) return FtqCombi{cfg, {}, cfg.symmetric};
  TilingSearch search(sorted, cfg);
  auto found = search.run();
  if (!found) throw NoTilingError("no ftq-combi has this vertex set");
  return *found;
}

namespace {

Rational height(const ColorSet& a, const ZonogonConfig& cfg) { return embed(a, cfg).y; }

void require_middle_line(const ZonogonConfig& cfg) {
  if (cfg.n % 2 != 0) throw ParityError("the middle line exists only for an even number of colors");
  if (!cfg.symmetric) throw NotSymmetricError("the zonogon configuration is not symmetric");
}

}  // namespace

std::vector<ColorSet> middle_path(const FtqCombi& k) {
  require_middle_line(k.config);
  const Rational ym = k.config.middle_height();
  std::vector<std::pair<Rational, ColorSet>> on;
  for (const auto& v : k.vertex_set()) {
    const Point2 p = embed(v, k.config);
    if (p.y == ym) on.emplace_back(p.x, v);
  }
  std::sort(on.begin(), on.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ColorSet> out;
  for (const auto& [x, v] : on) out.push_back(v);
  return out;
}

namespace {

// Splits tiles into those below and those above the middle line, after
// checking that the line is covered by tile edges.
std::pair<std::vector<Tile>, std::vector<Tile>> split_at_middle(const FtqCombi& k) {
  const std::vector<ColorSet> path = middle_path(k);
  std::set<Edge> all;
  for (const auto& t : k.tiles) {
    for (const auto& e : t.edges()) all.insert(e);
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!all.count(make_edge(path[i - 1], path[i]))) {
      throw NotMCoveredError("middle segment " + path[i - 1].to_string() + "-" + path[i].to_string() +
                             " is not an edge of the combi");
    }
  }
  const Rational ym = k.config.middle_height();
  std::vector<Tile> below;
  std::vector<Tile> above;
  for (const auto& t : k.tiles) {
    bool lo = false;
    bool hi = false;
    for (const auto& v : t.vertices()) {
      const Rational y = height(v, k.config);
      lo = lo || y < ym;
      hi = hi || y > ym;
    }
    if (lo && hi) throw NotMCoveredError("tile " + tile_name(t) + " crosses the middle line");
    (lo ? below : above).push_back(t);
  }
  return {below, above};
}

}  // namespace

FtqCombi reflect_symmetrize(const FtqCombi& k) {
  require_middle_line(k.config);
  const auto [below, above] = split_at_middle(k);
  FtqCombi out{k.config, {}, true};
  for (const auto& t : below) {
    out.tiles.push_back(t);
    out.tiles.push_back(t.reflected());
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  if (auto d = validate_ftq_combi(out)) throw NoTilingError("mirrored combi is invalid: " + d->kind + " " + d->detail);
  return out;
}

bool is_symmetric_combi(const FtqCombi& k) {
  std::vector<Tile> a = k.tiles;
  std::vector<Tile> b;
  for (const auto& t : a) b.push_back(t.reflected());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

ColorSet insert_middle(const ColorSet& a, int mid, bool member) {
  const std::uint64_t low = a.bits() & ((std::uint64_t{1} << (mid - 1)) - 1);
  const std::uint64_t high = (a.bits() >> (mid - 1)) << mid;
  std::uint64_t bits = low | high;
  if (member) bits |= std::uint64_t{1} << (mid - 1);
  return ColorSet(a.n() + 1, bits);
}

}  // namespace

OddExpansion expand_combi_odd(const FtqCombi& k) {
  require_middle_line(k.config);
  if (!is_symmetric_combi(k)) throw NotSymmetricError("expand_combi_odd needs a symmetric combi");
  const int n = k.config.n;
  const int m = n / 2;
  const int mid = m + 1;
  auto color = [&](int c) { return c <= m ? c : c + 1; };
  auto shift = [&](const Tile& t, bool up) {
    Tile out{t.kind, insert_middle(t.anchor, mid, up), {}};
    for (int c : t.colors) out.colors.push_back(color(c));
    return out;
  };
  const auto [below, above] = split_at_middle(k);
  FtqCombi out{make_zonogon_config(n + 1, true), {}, false};
  for (const auto& t : below) out.tiles.push_back(shift(t, false));
  for (const auto& t : above) out.tiles.push_back(shift(t, true));

  const std::vector<ColorSet> path = middle_path(k);
  if (static_cast<int>(path.size()) != m + 1) {
    throw NotMCoveredError("middle path has " + std::to_string(path.size() - 1) + " edges, expected " +
                           std::to_string(m));
  }
  std::vector<ColorSet> added;
  for (int p = 1; p <= m; ++p) {
    const ColorSet& r0 = path[static_cast<std::size_t>(p - 1)];
    const ColorSet& r1 = path[static_cast<std::size_t>(p)];
    const ColorSet gone = r0 - r1;
    const ColorSet came = r1 - r0;
    if (gone.size() != 1 || came.size() != 1 || came.min() != n + 1 - gone.min() || gone.min() > m) {
      throw NotMCoveredError("middle edge " + r0.to_string() + "-" + r1.to_string() + " is not of type i i°");
    }
    const int i = color(gone.min());
    const int io = color(came.min());
    const ColorSet left = insert_middle(r0, mid, false);
    const ColorSet right = insert_middle(r1, mid, false);
    const ColorSet v = left.with(io);
    out.tiles.push_back({TileKind::nabla, left, {mid, io}});
    out.tiles.push_back({TileKind::nabla, right, {i, mid}});
    out.tiles.push_back({TileKind::delta, v, {i, io}});
    out.tiles.push_back({TileKind::lower, v.with(mid), {i, mid, io}});
    added.push_back(v);
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  if (auto d = validate_ftq_combi(out)) throw NoTilingError("expanded combi is invalid: " + d->kind + " " + d->detail);
  std::vector<ColorSet> rest;
  for (const auto& v : out.vertex_set()) {
    if (std::find(added.begin(), added.end(), v) == added.end()) rest.push_back(v);
  }
  std::sort(added.begin(), added.end());
  return {out, SymCollection(n + 1, Relation::weak(), std::move(rest)), added};
}

}  // namespace sepsym
