#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lscat/point_set.hpp"

namespace lscat {

/// A finite T0 space, stored as its specialization poset.
///
/// Open sets are up-sets and closed sets are down-sets: the minimal open
/// neighbourhood U_x of a point is its up-set and the closure of {x} is its
/// down-set. The dual convention is obtained with opposite() and is never
/// mixed with this one.
class FinSpace {
 public:
  /// Builds a space from point labels and strict relations "left < right".
  /// The relation is closed reflexively and transitively. Throws InputError
  /// on cycles, duplicate labels, unknown labels or more than kMaxPoints
  /// points.
  static FinSpace build(std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& less);
  static FinSpace from_indices(std::vector<std::string> labels,
                               const std::vector<std::pair<int, int>>& less);

  int size() const { return static_cast<int>(labels_.size()); }
  PointSet all() const { return PointSet::first(size()); }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  bool leq(int x, int y) const { return up_[x].contains(y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  PointSet up(int x) const { return up_[x]; }
  PointSet down(int x) const { return down_[x]; }

  bool contains(PointSet a) const { return a.subset_of(all()); }
  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const;
  /// Smallest open set containing `a` (union of the U_x).
  PointSet open_hull(PointSet a) const;
  /// Topological closure (union of the down-sets).
  PointSet closure(PointSet a) const;

  PointSet minimal_points(PointSet a) const;
  PointSet maximal_points(PointSet a) const;
  /// Points covered by x (immediately below it).
  PointSet lower_covers(int x) const;
  /// Points covering x (immediately above it).
  PointSet upper_covers(int x) const;

  /// Path component of x inside `within` (comparability graph).
  PointSet component_of(int x, PointSet within) const;
  std::vector<PointSet> components(PointSet within) const;
  std::vector<PointSet> components() const { return components(all()); }

  /// All open sets, in increasing numeric order.
  std::vector<PointSet> open_sets() const;
  std::vector<PointSet> closed_sets() const;

  FinSpace opposite() const;

  /// Hasse diagram edges (x, y) with y covering x.
  std::vector<std::pair<int, int>> cover_relations() const;

  std::string format(PointSet a) const;
  std::vector<std::string> label_list(PointSet a) const;
  /// Parses "a,b,c", "full" or "" into a subset. Throws InputError.
  PointSet parse_subset(std::string_view text) const;

  bool operator==(const FinSpace& o) const { return labels_ == o.labels_ && up_ == o.up_; }

 private:
  FinSpace() = default;
  void finish();

  std::vector<std::string> labels_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

using SpacePtr = std::shared_ptr<const FinSpace>;

inline SpacePtr share(FinSpace s) { return std::make_shared<const FinSpace>(std::move(s)); }

/// An order-preserving (equivalently continuous) map between finite spaces.
class ContMap {
 public:
  /// Throws InputError unless image has dom->size() entries inside cod and
  /// the map preserves the order.
  ContMap(SpacePtr dom, SpacePtr cod, std::vector<std::uint8_t> image);

  static ContMap identity(const SpacePtr& space);
  static ContMap constant(const SpacePtr& dom, const SpacePtr& cod, int value);

  const SpacePtr& dom() const { return dom_; }
  const SpacePtr& cod() const { return cod_; }
  const std::vector<std::uint8_t>& image() const { return image_; }
  int operator()(int x) const { return image_[x]; }

  PointSet image_of(PointSet a) const;
  PointSet preimage(PointSet b) const;
  bool is_constant() const;

  /// (*this) after `inner`, i.e. this ∘ inner.
  ContMap after(const ContMap& inner) const;

  bool operator==(const ContMap& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && image_ == o.image_;
  }

 private:
  struct Unchecked {};
  ContMap(Unchecked, SpacePtr dom, SpacePtr cod, std::vector<std::uint8_t> image)
      : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {}
  friend ContMap unchecked_map(SpacePtr, SpacePtr, std::vector<std::uint8_t>);

  SpacePtr dom_;
  SpacePtr cod_;
  std::vector<std::uint8_t> image_;
};

/// Builds a map without the continuity check; callers guarantee it.
ContMap unchecked_map(SpacePtr dom, SpacePtr cod, std::vector<std::uint8_t> image);

/// True iff `image` (a point of each dom point) is order-preserving.
bool preserves_order(const FinSpace& dom, const FinSpace& cod,
                     const std::vector<std::uint8_t>& image);

/// Induced subspace on a nonempty subset, with its embedding.
struct Subspace {
  SpacePtr space;
  ContMap embedding;
  std::vector<int> points;  ///< subspace index -> ambient index
};

/// Throws EmptySubsetError on an empty subset.
Subspace subspace(const SpacePtr& ambient, PointSet a);

FinSpace product(const FinSpace& x, const FinSpace& y);

/// Builtin spaces: "chain(k)", "antichain(k)", "circle4", "sphere(n)",
/// "wedge2circles", "torus16". Returns nullopt for unknown names and throws
/// InputError for malformed parameters.
std::optional<FinSpace> builtin_space(std::string_view name);
std::vector<std::string> builtin_space_names();

}  // namespace lscat
