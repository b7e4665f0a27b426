#pragma once

// Subsets of the color set [n] = {1..n} and the involutions acting on them.
//
// Colors use the standard labels 1..n everywhere in the library. The
// symmetrized labels [-m..m] (odd n) and [-m..m]^- (even n) exist only as a
// presentation bijection on GroundSet.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sepsym {

inline constexpr int kMaxColors = 64;

enum class Labeling { standard, symmetrized };

class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const noexcept { return n_; }
  bool is_odd() const noexcept { return (n_ & 1) != 0; }
  // floor(n/2): the number of symmetric color pairs {i, i°} with i != i°.
  int half() const noexcept { return n_ / 2; }
  // Standard label of the self-symmetric color; only defined for odd n.
  int middle_color() const;

  int mirror(int color) const;  // i° = n+1-i
  int to_symmetrized(int color) const;
  int from_symmetrized(int label) const;

  std::uint64_t full_mask() const noexcept;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
};

// i° = n+1-i.
int color_involution(int color, int n);

// A subset of [n] stored as a fixed-width bit vector (bit i-1 <=> color i).
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(int n);
  ColorSet(int n, std::uint64_t bits);
  ColorSet(int n, std::initializer_list<int> colors);
  static ColorSet from_labels(int n, const std::vector<int>& colors);
  static ColorSet full(int n);
  // [a..b]; empty when a > b.
  static ColorSet interval(int n, int a, int b);

  int n() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  GroundSet ground() const { return GroundSet(n_); }

  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  bool contains(int color) const;
  int min() const;  // smallest color; requires non-empty
  int max() const;  // largest color; requires non-empty

  ColorSet with(int color) const;
  ColorSet without(int color) const;
  ColorSet complement() const;
  std::vector<int> labels() const;  // ascending standard labels

  ColorSet operator|(const ColorSet& o) const;
  ColorSet operator&(const ColorSet& o) const;
  ColorSet operator-(const ColorSet& o) const;
  ColorSet operator^(const ColorSet& o) const;

  bool operator==(const ColorSet& o) const noexcept { return n_ == o.n_ && bits_ == o.bits_; }

  // Canonical order: by size, then lexicographically on the ascending label list.
  std::strong_ordering operator<=>(const ColorSet& o) const;

  std::string to_string() const;  // "{1,3}"

 private:
  void check_same(const ColorSet& o) const;

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// A* = { i° : i not in A }.
ColorSet k_involution(const ColorSet& a);

enum class MiddleState { absent, poor, full };

// A symmetric pair {i, i°} with i < i°, in standard labels.
using ColorPair = std::pair<int, int>;

struct PairProfile {
  std::vector<ColorPair> poor;
  std::vector<ColorPair> ordinary;
  std::vector<ColorPair> full;
  MiddleState middle = MiddleState::absent;
};

PairProfile classify_pairs(const ColorSet& a);

enum class SetShape { interval, cointerval, both, neither };

bool is_interval(const ColorSet& a);
bool is_cointerval(const ColorSet& a);
SetShape set_shape(const ColorSet& a);

struct OrderPredicates {
  bool less = false;
  bool a_surrounds_b = false;
  bool b_surrounds_a = false;
};

// A < B means max(A) < min(B) with max(∅) = -inf and min(∅) = +inf. A
// surrounds B when B-A is non-empty and the extreme elements of A-B lie
// strictly outside those of B-A.
OrderPredicates order_predicates(const ColorSet& a, const ColorSet& b);

// All 2^n subsets of [n] in increasing bit order.
std::vector<ColorSet> all_subsets(int n);

}  // namespace sepsym

template <>
struct std::hash<sepsym::ColorSet> {
  std::size_t operator()(const sepsym::ColorSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s.n()));
  }
};
