#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lscat/category_value.hpp"
#include "lscat/finspace.hpp"
#include "lscat/homotopy.hpp"

namespace lscat {

using SetPredicate = std::function<bool(PointSet)>;

/// All ⊆-maximal nonempty open sets satisfying `pred`, ascending by bits.
///
/// `pred` must be downward closed on open sets. The search descends from the
/// whole space by removing one minimal point at a time and stops below the
/// first success on each branch; `pred` is called at most once per open set
/// and never on ∅.
std::vector<PointSet> maximal_trivial_opens(const FinSpace& space, const SetPredicate& pred);
/// Closed-set dual of maximal_trivial_opens.
std::vector<PointSet> maximal_trivial_closeds(const FinSpace& space, const SetPredicate& pred);

struct CoverResult {
  CategoryValue value;
  std::vector<PointSet> witness;  ///< sorted ascending; empty when infinite
};

/// Exact minimum number of candidates whose union contains `a`.
///
/// Branch and bound: greedy initial incumbent, then branching on the
/// uncovered point with fewest covering candidates, candidates tried in
/// ascending bit order. Candidates may spill outside `a`.
CoverResult min_cover(PointSet a, std::span<const PointSet> candidates);

/// A family of open sets of one space: either an explicit list or a
/// predicate on open sets.
class TCollection {
 public:
  static TCollection explicit_family(SpacePtr space, std::vector<PointSet> members,
                                     std::string name);
  /// `downward_closed` lets covers use maximal members only.
  static TCollection predicate(SpacePtr space, SetPredicate pred, bool downward_closed,
                               std::string name);
  static TCollection all_opens(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::string& name() const { return name_; }
  bool is_explicit() const { return explicit_; }
  bool downward_closed() const { return downward_closed_; }

  /// Membership; non-open sets are never members.
  bool contains(PointSet u) const;
  /// Every member (open sets enumerated for predicate families), ascending.
  std::vector<PointSet> members() const;
  /// Nonempty sets used as cover candidates.
  std::vector<PointSet> cover_candidates() const;

 private:
  TCollection() = default;
  SpacePtr space_;
  std::string name_;
  bool explicit_ = true;
  bool downward_closed_ = false;
  std::vector<PointSet> family_;
  SetPredicate pred_;
};

/// Covering number by members of T; ∞ if some point of `a` is in no member.
CoverResult nu_T(const TCollection& t, PointSet a);

/// T_{ν,n}: open U with ν(U) ≤ n. Downward closed when ν is monotone.
TCollection t_of_nu(SpacePtr space, std::function<CategoryValue(PointSet)> nu, int n,
                    bool nu_monotone, const std::string& nu_name);

struct TCollectionViolation {
  ContMap map;
  PointSet member;
  PointSet preimage;
};

struct TCollectionReport {
  bool complete = true;  ///< false when the map enumeration was truncated
  std::size_t maps_checked = 0;
  std::size_t members_checked = 0;
  std::vector<TCollectionViolation> violations;
  bool verified() const { return violations.empty(); }
};

/// Checks f⁻¹(U) ∈ T for every enumerated f ≃ id and every U ∈ T (maximal
/// members only when T is downward closed).
TCollectionReport verify_t_collection(const TCollection& t, std::size_t map_cap);

/// ν_H and ν_LS for one-off queries. Repeated queries on one space should
/// go through SpaceAnalysis, which caches candidate families.
CoverResult nu_H(const SpacePtr& space, PointSet a, const SearchLimits& limits = {});
CoverResult nu_LS(const SpacePtr& space, PointSet a, const SearchLimits& limits = {});

}  // namespace lscat
