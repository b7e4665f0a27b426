#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepsym/colorset.hpp"

namespace sepsym {

enum class RelationKind { strong, weak, chord, k_separated };

// A pairwise separation relation. k_separated(1) decides like strong and
// k_separated(2) like chord.
struct Relation {
  RelationKind kind = RelationKind::weak;
  int k = 0;  // only meaningful for k_separated

  static Relation strong() { return {RelationKind::strong, 0}; }
  static Relation weak() { return {RelationKind::weak, 0}; }
  static Relation chord() { return {RelationKind::chord, 0}; }
  static Relation k_separated(int k);

  // "strong", "weak", "chord" or "k=3".
  std::string name() const;
  static Relation parse(const std::string& text);

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Number of maximal runs when the elements of A△B are read in increasing
// order and labelled by the side they come from. An alternating chain of
// length L across the two differences exists iff alternation_blocks >= L.
int alternation_blocks(const ColorSet& a, const ColorSet& b);

bool is_strongly_separated(const ColorSet& a, const ColorSet& b);
bool is_chord_separated(const ColorSet& a, const ColorSet& b);
bool is_weakly_separated(const ColorSet& a, const ColorSet& b);
bool is_k_separated(const ColorSet& a, const ColorSet& b, int k);

bool separated(const ColorSet& a, const ColorSet& b, const Relation& r);

// The lexicographically least failing pair (canonical ColorSet order), or
// nullopt when every unordered pair of members is separated.
std::optional<std::pair<ColorSet, ColorSet>> pairwise_separated(std::span<const ColorSet> members,
                                                                const Relation& r);

}  // namespace sepsym
