#include "sepsym/colorset.hpp"

#include <bit>
#include <sstream>

#include "sepsym/errors.hpp"

namespace sepsym {

namespace {

std::uint64_t mask_for(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_color(int color, int n) {
  if (color < 1 || color > n) {
    throw std::out_of_range("color " + std::to_string(color) + " outside [1.." + std::to_string(n) + "]");
  }
}

std::uint64_t reverse_bits(std::uint64_t bits, int n) {
  std::uint64_t out = 0;
  while (bits != 0) {
    int i = std::countr_zero(bits);
    out |= std::uint64_t{1} << (n - 1 - i);
    bits &= bits - 1;
  }
  return out;
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxColors) {
    throw std::invalid_argument("ground set size must lie in [1.." + std::to_string(kMaxColors) + "], got " +
                                std::to_string(n));
  }
}

int GroundSet::middle_color() const {
  if (!is_odd()) throw ParityError("even ground set has no middle color");
  return half() + 1;
}

int GroundSet::mirror(int color) const {
  check_color(color, n_);
  return n_ + 1 - color;
}

int GroundSet::to_symmetrized(int color) const {
  check_color(color, n_);
  const int m = half();
  if (is_odd()) return color - m - 1;
  return color <= m ? color - m - 1 : color - m;
}

int GroundSet::from_symmetrized(int label) const {
  const int m = half();
  if (label < -m || label > m || (label == 0 && !is_odd())) {
    throw std::out_of_range("symmetrized label " + std::to_string(label) + " not in the ground set");
  }
  if (is_odd()) return label + m + 1;
  return label < 0 ? label + m + 1 : label + m;
}

std::uint64_t GroundSet::full_mask() const noexcept { return mask_for(n_); }

int color_involution(int color, int n) { return GroundSet(n).mirror(color); }

ColorSet::ColorSet(int n) : n_(GroundSet(n).size()) {}

ColorSet::ColorSet(int n, std::uint64_t bits) : n_(GroundSet(n).size()), bits_(bits) {
  if ((bits & ~mask_for(n)) != 0) throw std::out_of_range("bits outside the ground set");
}

ColorSet::ColorSet(int n, std::initializer_list<int> colors) : ColorSet(n) {
  for (int c : colors) {
    check_color(c, n);
    bits_ |= std::uint64_t{1} << (c - 1);
  }
}

ColorSet ColorSet::from_labels(int n, const std::vector<int>& colors) {
  ColorSet s(n);
  for (int c : colors) {
    check_color(c, n);
    s.bits_ |= std::uint64_t{1} << (c - 1);
  }
  return s;
}

ColorSet ColorSet::full(int n) { return ColorSet(n, mask_for(n)); }

ColorSet ColorSet::interval(int n, int a, int b) {
  ColorSet s(n);
  for (int c = a; c <= b; ++c) {
    check_color(c, n);
    s.bits_ |= std::uint64_t{1} << (c - 1);
  }
  return s;
}

int ColorSet::size() const noexcept { return std::popcount(bits_); }

bool ColorSet::contains(int color) const {
  check_color(color, n_);
  return ((bits_ >> (color - 1)) & 1U) != 0;
}

int ColorSet::min() const {
  if (bits_ == 0) throw std::logic_error("min of empty color set");
  return std::countr_zero(bits_) + 1;
}

int ColorSet::max() const {
  if (bits_ == 0) throw std::logic_error("max of empty color set");
  return 64 - std::countl_zero(bits_);
}

ColorSet ColorSet::with(int color) const {
  check_color(color, n_);
  return ColorSet(n_, bits_ | (std::uint64_t{1} << (color - 1)));
}

ColorSet ColorSet::without(int color) const {
  check_color(color, n_);
  return ColorSet(n_, bits_ & ~(std::uint64_t{1} << (color - 1)));
}

ColorSet ColorSet::complement() const { return ColorSet(n_, ~bits_ & mask_for(n_)); }

std::vector<int> ColorSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

void ColorSet::check_same(const ColorSet& o) const {
  if (n_ != o.n_) {
    throw GroundSetMismatch("color sets over [" + std::to_string(n_) + "] and [" + std::to_string(o.n_) + "]");
  }
}

ColorSet ColorSet::operator|(const ColorSet& o) const {
  check_same(o);
  return ColorSet(n_, bits_ | o.bits_);
}

ColorSet ColorSet::operator&(const ColorSet& o) const {
  check_same(o);
  return ColorSet(n_, bits_ & o.bits_);
}

ColorSet ColorSet::operator-(const ColorSet& o) const {
  check_same(o);
  return ColorSet(n_, bits_ & ~o.bits_);
}

ColorSet ColorSet::operator^(const ColorSet& o) const {
  check_same(o);
  return ColorSet(n_, bits_ ^ o.bits_);
}

std::strong_ordering ColorSet::operator<=>(const ColorSet& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = size() <=> o.size(); c != 0) return c;
  if (bits_ == o.bits_) return std::strong_ordering::equal;
  // Same size: the set holding the smallest color of the symmetric difference
  // comes first in the lexicographic order of label lists.
  const std::uint64_t low = (bits_ ^ o.bits_) & ~((bits_ ^ o.bits_) - 1);
  return (bits_ & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int c : labels()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

ColorSet k_involution(const ColorSet& a) {
  return ColorSet(a.n(), reverse_bits(a.complement().bits(), a.n()));
}

PairProfile classify_pairs(const ColorSet& a) {
  const GroundSet g = a.ground();
  PairProfile p;
  for (int i = 1; i <= g.half(); ++i) {
    const int j = g.mirror(i);
    const int count = static_cast<int>(a.contains(i)) + static_cast<int>(a.contains(j));
    auto& bucket = count == 0 ? p.poor : (count == 1 ? p.ordinary : p.full);
    bucket.emplace_back(i, j);
  }
  if (g.is_odd()) p.middle = a.contains(g.middle_color()) ? MiddleState::full : MiddleState::poor;
  return p;
}

bool is_interval(const ColorSet& a) {
  if (a.empty()) return true;
  const std::uint64_t shifted = a.bits() >> (a.min() - 1);
  return (shifted & (shifted + 1)) == 0;
}

bool is_cointerval(const ColorSet& a) { return is_interval(a.complement()); }

SetShape set_shape(const ColorSet& a) {
  const bool iv = is_interval(a);
  const bool co = is_cointerval(a);
  if (iv && co) return SetShape::both;
  if (iv) return SetShape::interval;
  if (co) return SetShape::cointerval;
  return SetShape::neither;
}

OrderPredicates order_predicates(const ColorSet& a, const ColorSet& b) {
  OrderPredicates r;
  r.less = a.empty() || b.empty() || a.max() < b.min();
  const ColorSet ab = a - b;
  const ColorSet ba = b - a;
  if (!ab.empty() && !ba.empty()) {
    r.a_surrounds_b = ab.min() < ba.min() && ab.max() > ba.max();
    r.b_surrounds_a = ba.min() < ab.min() && ba.max() > ab.max();
  }
  return r;
}

std::vector<ColorSet> all_subsets(int n) {
  GroundSet g(n);
  if (n > 30) throw ScaleLimitError("refusing to list 2^" + std::to_string(n) + " subsets");
  std::vector<ColorSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b <= g.full_mask(); ++b) out.emplace_back(n, b);
  return out;
}

}  // namespace sepsym
