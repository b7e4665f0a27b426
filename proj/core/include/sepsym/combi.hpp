#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepsym/collections.hpp"
#include "sepsym/colorset.hpp"
#include "sepsym/geometry.hpp"
#include "sepsym/zonogon.hpp"

namespace sepsym {

enum class TileKind { delta, nabla, upper, lower };

std::string to_string(TileKind k);
TileKind parse_tile_kind(const std::string& text);

// One tile of a combi.
//   delta: apex A, colors i<j, vertices A-j, A-i, A
//   nabla: apex A, colors i<j, vertices A, A+i, A+j
//   upper: root X, colors i<j<k(<...), vertices X+i, X+j, X+k, ...
//   lower: root Y, colors i<j<k(<...), vertices ..., Y-k, Y-j, Y-i
// Vertices of a semi-lens are listed along its curved side.
struct Tile {
  TileKind kind = TileKind::delta;
  ColorSet anchor;
  std::vector<int> colors;

  std::vector<ColorSet> vertices() const;
  // Boundary edges of the tile polygon, each as an ordered pair (a < b).
  std::vector<std::pair<ColorSet, ColorSet>> edges() const;
  bool is_semilens() const { return kind == TileKind::upper || kind == TileKind::lower; }

  // Image under A -> A*: delta <-> nabla, upper <-> lower.
  Tile reflected() const;

  friend bool operator==(const Tile&, const Tile&) = default;
  // Canonical output order: kind, anchor, colors.
  bool operator<(const Tile& o) const;
};

struct Diagnostic {
  std::string kind;
  std::string detail;
};

// A fine tiling of Z(n,2) by delta, nabla and triangular semi-lens tiles.
struct FtqCombi {
  ZonogonConfig config;
  std::vector<Tile> tiles;
  bool symmetric = false;

  // Union of the tile vertices and the boundary vertices of Z.
  std::vector<ColorSet> vertex_set() const;
};

// Coarsening of an ftq-combi: same-type semi-lenses sharing an edge merged.
struct FineQuasiCombi {
  ZonogonConfig config;
  std::vector<Tile> tiles;
  bool symmetric = false;

  std::vector<ColorSet> vertex_set() const;
};

std::vector<Point2> tile_polygon(const Tile& t, const ZonogonConfig& cfg);
Rational tile_area(const Tile& t, const ZonogonConfig& cfg);

// First violated clause, checked in order: tile shape, area, overlaps,
// boundary edges, internal edges, vertex set.
std::optional<Diagnostic> validate_ftq_combi(const FtqCombi& k);

// Tiling whose vertex set is the maximal w-collection W. Throws
// NotMaximalError or NoTilingError.
FtqCombi reconstruct_ftq_combi(std::span<const ColorSet> w, const ZonogonConfig& cfg);

// Vertices on the middle line, left to right.
std::vector<ColorSet> middle_path(const FtqCombi& k);

// Keeps the tiles below the middle line and mirrors them upward.
FtqCombi reflect_symmetrize(const FtqCombi& k);

bool is_symmetric_combi(const FtqCombi& k);

struct OddExpansion {
  FtqCombi combi;                // on 2m+1 colors
  SymCollection collection;      // its vertex set minus the m new asymmetric vertices
  std::vector<ColorSet> added;   // v_1, ..., v_m
};

OddExpansion expand_combi_odd(const FtqCombi& k);

FineQuasiCombi merge_semilenses(const FtqCombi& k, std::optional<std::uint64_t> order_seed = std::nullopt);

// Fan re-triangulation of every merged semi-lens from its leftmost vertex.
FtqCombi refine_fan(const FineQuasiCombi& q);

}  // namespace sepsym
