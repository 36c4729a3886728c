#include "lscat/analysis.hpp"

#include "lscat/error.hpp"

namespace lscat {

SpaceAnalysis::SpaceAnalysis(SpacePtr space, SearchLimits limits)
    : space_(std::move(space)), limits_(limits), core_(core_of(space_)) {}

const CohomologyRing& SpaceAnalysis::cohomology() const {
  std::lock_guard lock(mu_);
  if (!ring_) ring_ = std::make_unique<CohomologyRing>(space_cohomology(*space_));
  return *ring_;
}

bool SpaceAnalysis::contractible(PointSet a) const {
  std::lock_guard lock(mu_);
  if (auto it = contractible_.find(a); it != contractible_.end()) return it->second;
  const Verdict v = is_contractible_in(space_, core_, a, limits_);
  if (v == Verdict::undecided)
    throw UndecidedError("contractibility of " + space_->format(a) +
                         " undecided within the homotopy search cap");
  const bool out = v == Verdict::yes;
  contractible_.emplace(a, out);
  return out;
}

bool SpaceAnalysis::cohomologically_trivial(PointSet a) const {
  return cohomology().is_cohomologically_trivial(a.bits());
}

int SpaceAnalysis::cuplength(PointSet a) const { return cohomology().cuplength(a.bits()); }

const std::vector<PointSet>& SpaceAnalysis::contractible_opens() const {
  std::lock_guard lock(mu_);
  if (!contractible_opens_)
    contractible_opens_ =
        maximal_trivial_opens(*space_, [this](PointSet u) { return contractible(u); });
  return *contractible_opens_;
}

const std::vector<PointSet>& SpaceAnalysis::contractible_closeds() const {
  std::lock_guard lock(mu_);
  if (!contractible_closeds_)
    contractible_closeds_ =
        maximal_trivial_closeds(*space_, [this](PointSet u) { return contractible(u); });
  return *contractible_closeds_;
}

const std::vector<PointSet>& SpaceAnalysis::trivial_opens() const {
  std::lock_guard lock(mu_);
  if (!trivial_opens_)
    trivial_opens_ =
        maximal_trivial_opens(*space_, [this](PointSet u) { return cohomologically_trivial(u); });
  return *trivial_opens_;
}

CoverResult SpaceAnalysis::nu_H(PointSet a) const { return min_cover(a, contractible_opens()); }
CoverResult SpaceAnalysis::nu_LS(PointSet a) const { return min_cover(a, contractible_closeds()); }
CoverResult SpaceAnalysis::nu_c(PointSet a) const { return min_cover(a, trivial_opens()); }

CategoryValue SpaceAnalysis::nu_CL(PointSet a) const {
  if (a.empty()) return CategoryValue(0);
  return CategoryValue(static_cast<std::uint32_t>(cuplength(space_->open_hull(a))));
}

CategoryValue SpaceAnalysis::nu_CL_definitional(PointSet a) const {
  if (a.empty()) return CategoryValue(0);
  {
    std::lock_guard lock(mu_);
    if (!open_sets_) open_sets_ = space_->open_sets();
  }
  CategoryValue best = CategoryValue::infinity();
  for (const PointSet u : *open_sets_)
    if (a.subset_of(u)) best = std::min(best, CategoryValue(static_cast<std::uint32_t>(cuplength(u))));
  return best;
}

CoverResult nu_H(const SpacePtr& space, PointSet a, const SearchLimits& limits) {
  return SpaceAnalysis(space, limits).nu_H(a);
}

CoverResult nu_LS(const SpacePtr& space, PointSet a, const SearchLimits& limits) {
  return SpaceAnalysis(space, limits).nu_LS(a);
}

CoverResult nu_c(const SpacePtr& space, PointSet a) { return SpaceAnalysis(space).nu_c(a); }

CategoryValue nu_CL(const SpacePtr& space, PointSet a) { return SpaceAnalysis(space).nu_CL(a); }

}  // namespace lscat
