#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepsym/collections.hpp"
#include "sepsym/combi.hpp"
#include "sepsym/cubillage.hpp"

namespace sepsym {

using nlohmann::json;

json to_json(const ColorSet& a);
ColorSet colorset_from_json(const json& j, int n);

json to_json(const SymCollection& c);
json collection_to_json(int n, const Relation& r, std::span<const ColorSet> members);
// Accepts {"n":..,"relation":..,"members":[..]} or a bare array of sets
// (which then needs `n` and `relation`).
SymCollection collection_from_json(const json& j, std::optional<int> n = std::nullopt,
                                   std::optional<Relation> relation = std::nullopt);

json to_json(const PurityReport& r);

json to_json(const Tile& t);
Tile tile_from_json(const json& j, int n);
json to_json(const FtqCombi& k);
json to_json(const FineQuasiCombi& q);
FtqCombi combi_from_json(const json& j);

json to_json(const Cube& c);
json to_json(const Facet& f);
json to_json(const Cubillage& q);
Cubillage cubillage_from_json(const json& j);

json to_json(const Membrane& m);
Membrane membrane_from_json(const json& j, int n);

json to_json(const Diagnostic& d);

// Deterministic text form used for every file the tools write.
std::string dump(const json& j);

}  // namespace sepsym
