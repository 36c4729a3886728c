#include "lscat/cover.hpp"

#include <algorithm>
#include <unordered_set>

#include "lscat/error.hpp"

namespace lscat {

namespace {

std::vector<PointSet> keep_maximal(std::vector<PointSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      dominated = j != i && sets[i].subset_of(sets[j]);
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

template <class Shrink>
std::vector<PointSet> maximal_trivial(const FinSpace& space, const SetPredicate& pred,
                                      Shrink&& removable) {
  std::vector<PointSet> found;
  if (space.size() == 0) return found;
  std::unordered_set<PointSet> seen{space.all()};
  std::vector<PointSet> stack{space.all()};
  while (!stack.empty()) {
    const PointSet u = stack.back();
    stack.pop_back();
    if (pred(u)) {
      found.push_back(u);
      continue;
    }
    removable(u).for_each([&](int x) {
      const PointSet child = u.without(x);
      if (!child.empty() && seen.insert(child).second) stack.push_back(child);
    });
  }
  return keep_maximal(std::move(found));
}

class CoverSearch {
 public:
  CoverSearch(PointSet target, std::vector<PointSet> sets) : sets_(std::move(sets)) {
    target.for_each([&](int p) {
      std::vector<int> hits;
      for (int i = 0; i < static_cast<int>(sets_.size()); ++i)
        if (sets_[i].contains(p)) hits.push_back(i);
      covering_[p] = std::move(hits);
    });
    for (const auto& s : sets_) max_size_ = std::max(max_size_, s.size());
  }

  std::vector<int> run(PointSet target) {
    best_ = greedy(target);
    std::vector<int> chosen;
    dfs(target, chosen);
    return best_;
  }

 private:
  std::vector<int> greedy(PointSet uncovered) const {
    std::vector<int> picks;
    while (!uncovered.empty()) {
      int best = -1;
      int gain = 0;
      for (int i = 0; i < static_cast<int>(sets_.size()); ++i) {
        const int g = (sets_[i] & uncovered).size();
        if (g > gain) {
          gain = g;
          best = i;
        }
      }
      picks.push_back(best);
      uncovered = uncovered - sets_[best];
    }
    return picks;
  }

  void dfs(PointSet uncovered, std::vector<int>& chosen) {
    if (uncovered.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const std::size_t lower =
        chosen.size() + (uncovered.size() + max_size_ - 1) / std::max(max_size_, 1);
    if (lower >= best_.size()) return;
    int pivot = -1;
    std::size_t fewest = sets_.size() + 1;
    uncovered.for_each([&](int p) {
      if (covering_[p].size() < fewest) {
        fewest = covering_[p].size();
        pivot = p;
      }
    });
    for (int i : covering_[pivot]) {
      chosen.push_back(i);
      dfs(uncovered - sets_[i], chosen);
      chosen.pop_back();
    }
  }

  std::vector<PointSet> sets_;
  std::vector<int> covering_[kMaxPoints];
  int max_size_ = 0;
  std::vector<int> best_;
};

}  // namespace

std::vector<PointSet> maximal_trivial_opens(const FinSpace& space, const SetPredicate& pred) {
  return maximal_trivial(space, pred, [&](PointSet u) { return space.minimal_points(u); });
}

std::vector<PointSet> maximal_trivial_closeds(const FinSpace& space, const SetPredicate& pred) {
  return maximal_trivial(space, pred, [&](PointSet u) { return space.maximal_points(u); });
}

CoverResult min_cover(PointSet a, std::span<const PointSet> candidates) {
  if (a.empty()) return {CategoryValue(0), {}};
  // Trace of each candidate on `a`, keeping the smallest-bits original for
  // duplicate traces and dropping traces strictly inside another.
  std::vector<PointSet> originals(candidates.begin(), candidates.end());
  std::sort(originals.begin(), originals.end());
  std::vector<PointSet> traces;
  std::vector<PointSet> owners;
  for (const PointSet c : originals) {
    const PointSet t = c & a;
    if (t.empty() || std::find(traces.begin(), traces.end(), t) != traces.end()) continue;
    traces.push_back(t);
    owners.push_back(c);
  }
  std::vector<PointSet> sets;
  std::vector<PointSet> sources;
  PointSet reach;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < traces.size() && !dominated; ++j)
      dominated = j != i && traces[i].subset_of(traces[j]) && traces[i] != traces[j];
    if (dominated) continue;
    sets.push_back(traces[i]);
    sources.push_back(owners[i]);
    reach |= traces[i];
  }
  if (!a.subset_of(reach)) return {CategoryValue::infinity(), {}};

  CoverSearch search(a, sets);
  const auto picks = search.run(a);
  CoverResult out{CategoryValue(static_cast<std::uint32_t>(picks.size())), {}};
  for (int i : picks) out.witness.push_back(sources[i]);
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

// ---------------------------------------------------------------------------

TCollection TCollection::explicit_family(SpacePtr space, std::vector<PointSet> members,
                                         std::string name) {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!space->is_open(members[i]))
      throw InputError("T-collection member " + space->format(members[i]) + " is not open",
                       "members[" + std::to_string(i) + "]");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  TCollection t;
  t.space_ = std::move(space);
  t.name_ = std::move(name);
  t.explicit_ = true;
  t.family_ = std::move(members);
  return t;
}

TCollection TCollection::predicate(SpacePtr space, SetPredicate pred, bool downward_closed,
                                   std::string name) {
  TCollection t;
  t.space_ = std::move(space);
  t.name_ = std::move(name);
  t.explicit_ = false;
  t.downward_closed_ = downward_closed;
  t.pred_ = std::move(pred);
  return t;
}

TCollection TCollection::all_opens(SpacePtr space) {
  return predicate(std::move(space), [](PointSet) { return true; }, true, "all opens");
}

bool TCollection::contains(PointSet u) const {
  // ∅ belongs to every collection: it is never used in covers and every
  // preimage of it is ∅ again.
  if (u.empty()) return true;
  if (!space_->is_open(u)) return false;
  if (explicit_) return std::binary_search(family_.begin(), family_.end(), u);
  return pred_(u);
}

std::vector<PointSet> TCollection::members() const {
  if (explicit_) return family_;
  std::vector<PointSet> out;
  for (const PointSet u : space_->open_sets())
    if (u.empty() || pred_(u)) out.push_back(u);
  return out;
}

std::vector<PointSet> TCollection::cover_candidates() const {
  if (!explicit_ && downward_closed_) return maximal_trivial_opens(*space_, pred_);
  std::vector<PointSet> out;
  for (const PointSet u : members())
    if (!u.empty()) out.push_back(u);
  return out;
}

CoverResult nu_T(const TCollection& t, PointSet a) {
  const auto candidates = t.cover_candidates();
  return min_cover(a, candidates);
}

TCollection t_of_nu(SpacePtr space, std::function<CategoryValue(PointSet)> nu, int n,
                    bool nu_monotone, const std::string& nu_name) {
  if (n < 1) throw InputError("T_{nu,n} needs n >= 1");
  const CategoryValue bound(static_cast<std::uint32_t>(n));
  return TCollection::predicate(
      std::move(space), [nu = std::move(nu), bound](PointSet u) { return nu(u) <= bound; },
      nu_monotone, "T(" + nu_name + "," + std::to_string(n) + ")");
}

TCollectionReport verify_t_collection(const TCollection& t, std::size_t map_cap) {
  TCollectionReport report;
  const auto maps = enumerate_self_maps_homotopic_to_id(t.space(), map_cap);
  report.complete = !maps.truncated;
  const auto members = t.downward_closed() ? t.cover_candidates() : t.members();
  report.maps_checked = maps.maps.size();
  report.members_checked = members.size();
  for (const auto& f : maps.maps)
    for (const PointSet u : members) {
      const PointSet pre = f.preimage(u);
      if (!t.contains(pre)) report.violations.push_back({f, u, pre});
    }
  return report;
}

}  // namespace lscat
