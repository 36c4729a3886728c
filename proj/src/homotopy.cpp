#include "lscat/homotopy.hpp"

#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "lscat/error.hpp"

namespace lscat {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

namespace {

using Image = std::vector<std::uint8_t>;

std::string key_of(const Image& img) { return std::string(img.begin(), img.end()); }

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || *a == *b; }

// Emits every map one comparable single-point move away from `f`, point-major;
// for each point first the larger values ascending, then the smaller values
// descending.
template <class Emit>
void for_each_move(const FinSpace& dom, const FinSpace& cod, const Image& f, Emit&& emit) {
  Image g = f;
  for (int x = 0; x < dom.size(); ++x) {
    PointSet allowed = cod.all();
    dom.down(x).without(x).for_each([&](int z) { allowed &= cod.up(f[z]); });
    dom.up(x).without(x).for_each([&](int z) { allowed &= cod.down(f[z]); });
    const int cur = f[x];
    const PointSet above = allowed & cod.up(cur).without(cur);
    const PointSet below = allowed & cod.down(cur).without(cur);
    above.for_each([&](int y) {
      g[x] = static_cast<std::uint8_t>(y);
      emit(g);
    });
    for (PointSet rest = below; !rest.empty();) {
      const int y = rest.highest();
      rest = rest.without(y);
      g[x] = static_cast<std::uint8_t>(y);
      emit(g);
    }
    g[x] = f[x];
  }
}

// BFS from `start` until `goal` holds. Returns yes/no, or undecided when the
// visited set would exceed the cap.
template <class Goal>
Verdict search(const FinSpace& dom, const FinSpace& cod, const Image& start, Goal&& goal,
               std::size_t cap) {
  if (goal(start)) return Verdict::yes;
  std::unordered_set<std::string> seen{key_of(start)};
  std::deque<Image> queue{start};
  bool found = false;
  bool capped = false;
  while (!queue.empty() && !found && !capped) {
    Image f = std::move(queue.front());
    queue.pop_front();
    for_each_move(dom, cod, f, [&](const Image& g) {
      if (found || capped) return;
      if (!seen.insert(key_of(g)).second) return;
      if (goal(g)) {
        found = true;
        return;
      }
      if (seen.size() > cap) {
        capped = true;
        return;
      }
      queue.push_back(g);
    });
  }
  if (found) return Verdict::yes;
  return capped ? Verdict::undecided : Verdict::no;
}

std::vector<Image> all_order_preserving(const FinSpace& dom, const FinSpace& cod,
                                        std::uint64_t cap) {
  const int n = dom.size();
  const int m = cod.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > cap)
      throw SizeCapError("oracle would enumerate more than " + std::to_string(cap) + " maps");
  }
  std::vector<Image> out;
  Image img(n, 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(img);
      return;
    }
    for (int y = 0; y < m; ++y) {
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        if (dom.leq(z, x)) ok = cod.leq(img[z], y);
        if (ok && dom.leq(x, z)) ok = cod.leq(y, img[z]);
      }
      if (!ok) continue;
      img[x] = static_cast<std::uint8_t>(y);
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool pointwise_leq(const FinSpace& cod, const Image& f, const Image& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!cod.leq(f[i], g[i])) return false;
  return true;
}

// Component labels of the comparability graph on `maps`.
std::vector<std::size_t> comparability_components(const FinSpace& cod,
                                                  const std::vector<Image>& maps) {
  std::vector<std::size_t> parent(maps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (pointwise_leq(cod, maps[i], maps[j]) || pointwise_leq(cod, maps[j], maps[i]))
        parent[find(i)] = find(j);
    }
  for (std::size_t i = 0; i < maps.size(); ++i) parent[i] = find(i);
  return parent;
}

void require_same_ends(const ContMap& f, const ContMap& g) {
  if (!same_space(f.dom(), g.dom()) || !same_space(f.cod(), g.cod()))
    throw InputError("homotopy test between maps with different domain or codomain");
}

std::optional<BeatPoint> beat_point_at(const SpacePtr& space, int x, bool up) {
  const PointSet covers = up ? space->upper_covers(x) : space->lower_covers(x);
  if (covers.size() != 1) return std::nullopt;
  const int target = covers.lowest();
  Subspace rest = subspace(space, space->all().without(x));
  std::vector<std::uint8_t> img(space->size());
  for (int i = 0; i < static_cast<int>(rest.points.size()); ++i)
    img[rest.points[i]] = static_cast<std::uint8_t>(i);
  img[x] = img[target];
  ContMap r = unchecked_map(space, rest.space, std::move(img));
  return BeatPoint{x, target, up, rest.space, std::move(r), std::move(rest.embedding)};
}

}  // namespace

std::vector<BeatPoint> find_beat_points(const SpacePtr& space) {
  std::vector<BeatPoint> out;
  if (space->size() < 2) return out;
  for (int x = 0; x < space->size(); ++x)
    for (bool up : {true, false})
      if (auto b = beat_point_at(space, x, up)) out.push_back(std::move(*b));
  return out;
}

CoreReduction core_of(const SpacePtr& space) {
  CoreReduction red{space, ContMap::identity(space), ContMap::identity(space)};
  while (red.core->size() > 1) {
    std::optional<BeatPoint> beat;
    for (int x = 0; x < red.core->size() && !beat; ++x) {
      beat = beat_point_at(red.core, x, true);
      if (!beat) beat = beat_point_at(red.core, x, false);
    }
    if (!beat) break;
    red.retraction = beat->retraction.after(red.retraction);
    red.inclusion = red.inclusion.after(beat->inclusion);
    red.core = beat->reduced;
  }
  return red;
}

Verdict are_homotopic(const ContMap& f, const ContMap& g, const SearchLimits& limits) {
  require_same_ends(f, g);
  if (f.image() == g.image()) return Verdict::yes;
  const CoreReduction cod = core_of(f.cod());
  const CoreReduction dom = core_of(f.dom());
  const Image a = cod.retraction.after(f.after(dom.inclusion)).image();
  const Image b = cod.retraction.after(g.after(dom.inclusion)).image();
  return search(*dom.core, *cod.core, a, [&](const Image& h) { return h == b; },
                limits.state_cap);
}

bool homotopy_oracle(const ContMap& f, const ContMap& g, std::uint64_t cap) {
  require_same_ends(f, g);
  const auto maps = all_order_preserving(*f.dom(), *f.cod(), cap);
  const auto comp = comparability_components(*f.cod(), maps);
  std::size_t cf = maps.size(), cg = maps.size();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i] == f.image()) cf = comp[i];
    if (maps[i] == g.image()) cg = comp[i];
  }
  return cf == cg;
}

std::vector<ContMap> all_continuous_maps(const SpacePtr& dom, const SpacePtr& cod,
                                         std::uint64_t cap) {
  std::vector<ContMap> out;
  for (auto& img : all_order_preserving(*dom, *cod, cap)) out.push_back(unchecked_map(dom, cod, std::move(img)));
  return out;
}

std::vector<ContMap> oracle_homotopy_class(const ContMap& f, std::uint64_t cap) {
  const auto maps = all_order_preserving(*f.dom(), *f.cod(), cap);
  const auto comp = comparability_components(*f.cod(), maps);
  std::size_t cf = maps.size();
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i] == f.image()) cf = comp[i];
  std::vector<ContMap> out;
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (comp[i] == cf) out.push_back(unchecked_map(f.dom(), f.cod(), maps[i]));
  return out;
}

Verdict is_contractible_in(const SpacePtr& space, PointSet a, const SearchLimits& limits) {
  return is_contractible_in(space, core_of(space), a, limits);
}

Verdict is_contractible_in(const SpacePtr& space, const CoreReduction& core, PointSet a,
                           const SearchLimits& limits) {
  if (a.empty()) throw EmptySubsetError("contractibility of the empty set is not defined here");
  const Subspace sub = subspace(space, a);
  const FinSpace& s = *sub.space;
  for (int x = 0; x < s.size(); ++x)
    if (s.up(x) == s.all() || s.down(x) == s.all()) return Verdict::yes;
  const CoreReduction dom = core_of(sub.space);
  const ContMap h = core.retraction.after(sub.embedding.after(dom.inclusion));
  auto is_const = [](const Image& img) {
    for (auto v : img)
      if (v != img.front()) return false;
    return true;
  };
  return search(*dom.core, *core.core, h.image(), is_const, limits.state_cap);
}

MapEnumeration enumerate_self_maps_homotopic_to_id(const SpacePtr& space, std::size_t cap) {
  MapEnumeration out;
  const FinSpace& s = *space;
  const Image id = ContMap::identity(space).image();
  std::unordered_set<std::string> seen{key_of(id)};
  std::deque<Image> queue{id};
  std::vector<Image> order{id};
  while (!queue.empty() && !out.truncated) {
    Image f = std::move(queue.front());
    queue.pop_front();
    for_each_move(s, s, f, [&](const Image& g) {
      if (out.truncated || !seen.insert(key_of(g)).second) return;
      if (order.size() >= cap) {
        out.truncated = true;
        return;
      }
      order.push_back(g);
      queue.push_back(g);
    });
  }
  out.maps.reserve(order.size());
  for (auto& img : order) out.maps.push_back(unchecked_map(space, space, std::move(img)));
  return out;
}

}  // namespace lscat
