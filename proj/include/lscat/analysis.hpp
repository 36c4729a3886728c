#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lscat/cohomology.hpp"
#include "lscat/cover.hpp"
#include "lscat/homotopy.hpp"

namespace lscat {

/// The four covering/cohomological invariants of one finite space, with the
/// candidate families and the cohomology ring cached across queries.
///
///   nu_H   covers by open sets contractible in the space
///   nu_LS  covers by closed sets contractible in the space
///   nu_c   covers by cohomologically trivial open sets
///   nu_CL  cuplength of the minimal open hull
///
/// Every invariant is 0 on ∅. Thread-safe.
class SpaceAnalysis {
 public:
  explicit SpaceAnalysis(SpacePtr space, SearchLimits limits = {});

  const SpacePtr& space() const { return space_; }
  const SearchLimits& limits() const { return limits_; }
  const CoreReduction& core() const { return core_; }
  const CohomologyRing& cohomology() const;

  /// Throws UndecidedError when the homotopy search is capped.
  bool contractible(PointSet a) const;
  bool cohomologically_trivial(PointSet a) const;
  int cuplength(PointSet a) const;

  const std::vector<PointSet>& contractible_opens() const;
  const std::vector<PointSet>& contractible_closeds() const;
  const std::vector<PointSet>& trivial_opens() const;

  CoverResult nu_H(PointSet a) const;
  CoverResult nu_LS(PointSet a) const;
  CoverResult nu_c(PointSet a) const;
  CategoryValue nu_CL(PointSet a) const;
  /// Minimum of the cuplength over every open superset (enumerated).
  CategoryValue nu_CL_definitional(PointSet a) const;

 private:
  SpacePtr space_;
  SearchLimits limits_;
  CoreReduction core_;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<PointSet, bool> contractible_;
  mutable std::unique_ptr<CohomologyRing> ring_;
  mutable std::optional<std::vector<PointSet>> contractible_opens_;
  mutable std::optional<std::vector<PointSet>> contractible_closeds_;
  mutable std::optional<std::vector<PointSet>> trivial_opens_;
  mutable std::optional<std::vector<PointSet>> open_sets_;
};

CoverResult nu_c(const SpacePtr& space, PointSet a);
CategoryValue nu_CL(const SpacePtr& space, PointSet a);

}  // namespace lscat
