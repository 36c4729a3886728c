#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lscat/finspace.hpp"

namespace lscat {

enum class Verdict { no, yes, undecided };

const char* to_string(Verdict v);

struct SearchLimits {
  /// Maximum number of maps a homotopy search may visit.
  std::size_t state_cap = 200'000;
};

/// Decides f ≃ g by breadth-first search over single-point comparable moves.
///
/// A move changes the map at one point to a value comparable with the old
/// one, keeping the map order-preserving. The search runs on the instance
/// reduced to the cores of domain and codomain: with beat-point retractions
/// r (codomain) and q (domain inclusion), f ≃ g iff r∘f∘q ≃ r∘g∘q.
Verdict are_homotopic(const ContMap& f, const ContMap& g, const SearchLimits& limits = {});

/// Exact answer by enumerating every order-preserving map dom -> cod and
/// taking connected components of the pointwise-comparability graph.
/// Throws SizeCapError when |cod|^|dom| exceeds `cap`.
bool homotopy_oracle(const ContMap& f, const ContMap& g, std::uint64_t cap = 1'000'000);

/// Every order-preserving map dom -> cod, in lexicographic image order.
/// Throws SizeCapError when |cod|^|dom| exceeds `cap`.
std::vector<ContMap> all_continuous_maps(const SpacePtr& dom, const SpacePtr& cod,
                                         std::uint64_t cap = 1'000'000);

/// All maps in the oracle's component of f (same enumeration as above).
std::vector<ContMap> oracle_homotopy_class(const ContMap& f, std::uint64_t cap = 1'000'000);

/// A point with a unique upper cover (up-beat) or unique lower cover
/// (down-beat), with the retraction that moves it onto that cover.
struct BeatPoint {
  int point;
  int target;
  bool up;
  SpacePtr reduced;    ///< the space without `point`
  ContMap retraction;  ///< space -> reduced, identity off `point`
  ContMap inclusion;   ///< reduced -> space
};

std::vector<BeatPoint> find_beat_points(const SpacePtr& space);

/// Result of removing beat points until none remain.
struct CoreReduction {
  SpacePtr core;
  ContMap retraction;  ///< space -> core
  ContMap inclusion;   ///< core -> space; retraction∘inclusion = id
};

CoreReduction core_of(const SpacePtr& space);

/// Whether the inclusion of the nonempty subset `a` into `space` is
/// homotopic to a constant map. Throws EmptySubsetError on ∅.
Verdict is_contractible_in(const SpacePtr& space, PointSet a, const SearchLimits& limits = {});
/// Same, reusing a precomputed core reduction of `space`.
Verdict is_contractible_in(const SpacePtr& space, const CoreReduction& core, PointSet a,
                           const SearchLimits& limits = {});

struct MapEnumeration {
  std::vector<ContMap> maps;
  bool truncated = false;
};

/// Breadth-first closure of {id} under single-point comparable moves,
/// stopping after `cap` maps (flagged truncated). Moves are generated in a
/// fixed order, so the list is reproducible.
MapEnumeration enumerate_self_maps_homotopic_to_id(const SpacePtr& space, std::size_t cap);

}  // namespace lscat
