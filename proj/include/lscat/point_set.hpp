#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace lscat {

using Mask = std::uint64_t;

/// Hard limit on the number of points of a finite space (and vertices of a
/// simplicial complex). Subsets are stored as one machine word.
inline constexpr int kMaxPoints = 64;

/// A subset of the points of a finite space, as a bitset.
///
/// A PointSet does not carry its space; every FinSpace query validates that
/// the bits lie inside its point range.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(Mask bits) : bits_(bits) {}

  static constexpr PointSet single(int x) { return PointSet(Mask{1} << x); }
  static constexpr PointSet first(int n) {
    return PointSet(n >= kMaxPoints ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return kMaxPoints - 1 - std::countl_zero(bits_); }

  constexpr PointSet with(int x) const { return PointSet(bits_ | (Mask{1} << x)); }
  constexpr PointSet without(int x) const { return PointSet(bits_ & ~(Mask{1} << x)); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const PointSet&) const = default;
  constexpr auto operator<=>(const PointSet&) const = default;

  /// Calls fn(x) for every member, in ascending order.
  template <class Fn>
  constexpr void for_each(Fn&& fn) const {
    for (Mask m = bits_; m != 0; m &= m - 1) fn(std::countr_zero(m));
  }

 private:
  Mask bits_ = 0;
};

/// Calls fn(B) for every subset B of `set` (including the empty set and
/// `set` itself), in increasing numeric order of the bits.
template <class Fn>
void for_each_subset(PointSet set, Fn&& fn) {
  const Mask full = set.bits();
  Mask sub = 0;
  while (true) {
    fn(PointSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace lscat

template <>
struct std::hash<lscat::PointSet> {
  std::size_t operator()(lscat::PointSet s) const noexcept {
    return std::hash<lscat::Mask>{}(s.bits());
  }
};
