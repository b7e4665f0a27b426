#include "sepsym/separation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sepsym {

Relation Relation::k_separated(int k) {
  if (k < 1) throw std::invalid_argument("k-separation needs k >= 1");
  return {RelationKind::k_separated, k};
}

std::string Relation::name() const {
  switch (kind) {
    case RelationKind::strong:
      return "strong";
    case RelationKind::weak:
      return "weak";
    case RelationKind::chord:
      return "chord";
    case RelationKind::k_separated:
      return "k=" + std::to_string(k);
  }
  return "?";
}

Relation Relation::parse(const std::string& text) {
  if (text == "strong") return strong();
  if (text == "weak") return weak();
  if (text == "chord") return chord();
  if (text.rfind("k=", 0) == 0) return k_separated(std::stoi(text.substr(2)));
  throw std::invalid_argument("unknown relation '" + text + "'");
}

int alternation_blocks(const ColorSet& a, const ColorSet& b) {
  const ColorSet diff = a ^ b;
  std::uint64_t rest = diff.bits();
  const std::uint64_t in_a = a.bits();
  int blocks = 0;
  int last = -1;
  while (rest != 0) {
    const int i = std::countr_zero(rest);
    const int side = static_cast<int>((in_a >> i) & 1U);
    if (side != last) {
      ++blocks;
      last = side;
    }
    rest &= rest - 1;
  }
  return blocks;
}

bool is_strongly_separated(const ColorSet& a, const ColorSet& b) { return alternation_blocks(a, b) <= 2; }

bool is_chord_separated(const ColorSet& a, const ColorSet& b) { return alternation_blocks(a, b) <= 3; }

bool is_weakly_separated(const ColorSet& a, const ColorSet& b) {
  const int blocks = alternation_blocks(a, b);
  if (blocks <= 2) return true;
  if (blocks > 3) return false;
  // Three runs: the set owning the outer runs surrounds the other one.
  const ColorSet diff = a ^ b;
  const bool a_outer = a.contains(diff.min());
  return a_outer ? a.size() <= b.size() : b.size() <= a.size();
}

bool is_k_separated(const ColorSet& a, const ColorSet& b, int k) {
  if (k < 1) throw std::invalid_argument("k-separation needs k >= 1");
  return alternation_blocks(a, b) < k + 2;
}

bool separated(const ColorSet& a, const ColorSet& b, const Relation& r) {
  switch (r.kind) {
    case RelationKind::strong:
      return is_strongly_separated(a, b);
    case RelationKind::weak:
      return is_weakly_separated(a, b);
    case RelationKind::chord:
      return is_chord_separated(a, b);
    case RelationKind::k_separated:
      return is_k_separated(a, b, r.k);
  }
  return false;
}

std::optional<std::pair<ColorSet, ColorSet>> pairwise_separated(std::span<const ColorSet> members,
                                                                const Relation& r) {
  std::vector<ColorSet> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!separated(sorted[i], sorted[j], r)) return std::make_pair(sorted[i], sorted[j]);
    }
  }
  return std::nullopt;
}

}  // namespace sepsym
