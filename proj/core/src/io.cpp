#include "sepsym/io.hpp"

#include "sepsym/errors.hpp"

namespace sepsym {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw BadInputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<int> int_list(const json& j) {
  if (!j.is_array()) throw BadInputError("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw BadInputError("expected an integer, got " + x.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const ColorSet& a) { return a.labels(); }

ColorSet colorset_from_json(const json& j, int n) {
  try {
    return ColorSet::from_labels(n, int_list(j));
  } catch (const std::out_of_range& e) {
    throw BadInputError(e.what());
  }
}

json collection_to_json(int n, const Relation& r, std::span<const ColorSet> members) {
  json list = json::array();
  for (const auto& a : members) list.push_back(to_json(a));
  return {{"n", n}, {"relation", r.name()}, {"size", members.size()}, {"members", list}};
}

json to_json(const SymCollection& c) { return collection_to_json(c.n(), c.relation(), c.members()); }

SymCollection collection_from_json(const json& j, std::optional<int> n, std::optional<Relation> relation) {
  const json* list = &j;
  if (j.is_object()) {
    if (!n) n = field(j, "n").get<int>();
    if (!relation && j.contains("relation")) relation = Relation::parse(j.at("relation").get<std::string>());
    list = &field(j, "members");
  }
  if (!n) throw BadInputError("collection file does not name the number of colors");
  if (!list->is_array()) throw BadInputError("collection members must be an array");
  std::vector<ColorSet> members;
  for (const auto& x : *list) members.push_back(colorset_from_json(x, *n));
  return SymCollection(*n, relation.value_or(Relation::weak()), std::move(members));
}

json to_json(const PurityReport& r) {
  json sizes = json::object();
  for (const auto& [size, count] : r.sizes) sizes[std::to_string(size)] = count;
  return {{"n", r.n},
          {"relation", r.relation.name()},
          {"domain", r.domain.name()},
          {"count", r.count},
          {"sizes", sizes},
          {"pure", r.pure()},
          {"target", r.target ? json(*r.target) : json(nullptr)}};
}

json to_json(const Tile& t) {
  return {{"kind", to_string(t.kind)}, {"apex_or_root", to_json(t.anchor)}, {"colors", t.colors}};
}

Tile tile_from_json(const json& j, int n) {
  return {parse_tile_kind(field(j, "kind").get<std::string>()), colorset_from_json(field(j, "apex_or_root"), n),
          int_list(field(j, "colors"))};
}

namespace {

json tiles_json(int n, bool symmetric, const std::vector<Tile>& tiles) {
  json list = json::array();
  for (const auto& t : tiles) list.push_back(to_json(t));
  return {{"n", n}, {"symmetric", symmetric}, {"tiles", list}};
}

}  // namespace

json to_json(const FtqCombi& k) { return tiles_json(k.config.n, k.symmetric, k.tiles); }

json to_json(const FineQuasiCombi& q) { return tiles_json(q.config.n, q.symmetric, q.tiles); }

FtqCombi combi_from_json(const json& j) {
  const int n = field(j, "n").get<int>();
  const bool symmetric = j.value("symmetric", false);
  FtqCombi k{make_zonogon_config(n, symmetric), {}, symmetric};
  for (const auto& t : field(j, "tiles")) k.tiles.push_back(tile_from_json(t, n));
  return k;
}

json to_json(const Cube& c) { return {{"base", to_json(c.base)}, {"type", c.type}}; }

json to_json(const Facet& f) { return {{"base", to_json(f.base)}, {"colors", {f.a, f.b}}}; }

json to_json(const Cubillage& q) {
  json list = json::array();
  for (const auto& c : q.cubes) list.push_back(to_json(c));
  return {{"n", q.config.n}, {"symmetric", q.symmetric}, {"cubes", list}};
}

namespace {

Cube cube_from_json(const json& j, int n) {
  const std::vector<int> t = int_list(field(j, "type"));
  if (t.size() != 3) throw BadInputError("a cube type has three colors");
  return {colorset_from_json(field(j, "base"), n), {t[0], t[1], t[2]}};
}

Facet facet_from_json(const json& j, int n) {
  const std::vector<int> c = int_list(field(j, "colors"));
  if (c.size() != 2) throw BadInputError("a facet has two colors");
  return {colorset_from_json(field(j, "base"), n), c[0], c[1]};
}

}  // namespace

Cubillage cubillage_from_json(const json& j) {
  const int n = field(j, "n").get<int>();
  const bool symmetric = j.value("symmetric", false);
  Cubillage q{make_zonotope_config(n, symmetric), {}, symmetric};
  for (const auto& c : field(j, "cubes")) q.cubes.push_back(cube_from_json(c, n));
  return q;
}

json to_json(const Membrane& m) {
  json items = json::array();
  for (const auto& item : m.items) {
    if (const auto* h = std::get_if<HalfFacet>(&item)) {
      items.push_back({{"facet", to_json(h->facet)}, {"half", h->upper ? "upper" : "lower"}});
    } else {
      const auto& s = std::get<Section>(item);
      items.push_back({{"cube", to_json(s.cube)}, {"level", s.level}});
    }
  }
  json out{{"kind", m.kind == MembraneKind::strong ? "strong" : "weak"}, {"items", items}};
  if (m.kind == MembraneKind::strong) out["direction"] = to_string(m.direction);
  return out;
}

Membrane membrane_from_json(const json& j, int n) {
  Membrane m;
  m.kind = j.value("kind", std::string("weak")) == "strong" ? MembraneKind::strong : MembraneKind::weak;
  if (j.contains("direction")) m.direction = Rational(j.at("direction").get<std::string>());
  for (const auto& item : field(j, "items")) {
    if (item.contains("facet")) {
      m.items.push_back(HalfFacet{facet_from_json(item.at("facet"), n), field(item, "half").get<std::string>() == "upper"});
    } else {
      m.items.push_back(Section{cube_from_json(field(item, "cube"), n), field(item, "level").get<int>()});
    }
  }
  return m;
}

json to_json(const Diagnostic& d) { return {{"kind", d.kind}, {"detail", d.detail}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sepsym
