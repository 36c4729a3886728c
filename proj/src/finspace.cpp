#include "lscat/finspace.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "lscat/error.hpp"

namespace lscat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Visits the points of `space` so that every point comes after all points
// strictly above it (for up-sets) or below it (for down-sets).
template <class Fn>
void enumerate_monotone_sets(const FinSpace& space, bool upward, Fn&& emit) {
  const int n = space.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto cone = [&](int x) { return upward ? space.up(x) : space.down(x); };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return cone(a).size() < cone(b).size(); });
  auto rec = [&](auto&& self, int i, PointSet current) -> void {
    if (i == n) {
      emit(current);
      return;
    }
    const int x = order[i];
    self(self, i + 1, current);
    if (cone(x).without(x).subset_of(current)) self(self, i + 1, current.with(x));
  };
  rec(rec, 0, PointSet{});
}

}  // namespace

FinSpace FinSpace::build(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& less) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw InputError("duplicate point label '" + labels[i] + "'",
                       "points[" + std::to_string(i) + "]");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(less.size());
  for (std::size_t k = 0; k < less.size(); ++k) {
    auto lookup = [&](const std::string& name, int side) {
      auto it = index.find(name);
      if (it == index.end())
        throw InputError("unknown point '" + name + "'",
                         "order[" + std::to_string(k) + "][" + std::to_string(side) + "]");
      return it->second;
    };
    pairs.emplace_back(lookup(less[k].first, 0), lookup(less[k].second, 1));
  }
  return from_indices(std::move(labels), pairs);
}

FinSpace FinSpace::from_indices(std::vector<std::string> labels,
                                const std::vector<std::pair<int, int>>& less) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxPoints)
    throw InputError("space has " + std::to_string(n) + " points; the limit is " +
                     std::to_string(kMaxPoints));
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw InputError("duplicate point label '" + *dup + "'", "points");
  }
  FinSpace s;
  s.labels_ = std::move(labels);
  s.up_.resize(n);
  for (int x = 0; x < n; ++x) s.up_[x] = PointSet::single(x);
  for (auto [a, b] : less) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("relation index out of range", "order");
    s.up_[a] = s.up_[a].with(b);
  }
  // Warshall closure on bitset rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (s.up_[i].contains(k)) s.up_[i] |= s.up_[k];
  for (int x = 0; x < n; ++x) {
    const PointSet above = s.up_[x].without(x);
    for (int y = 0; y < n; ++y) {
      if (above.contains(y) && s.up_[y].contains(x))
        throw InputError("order relation has a cycle through '" + s.labels_[x] + "' and '" +
                         s.labels_[y] + "'", "order");
    }
  }
  s.finish();
  return s;
}

void FinSpace::finish() {
  const int n = size();
  down_.assign(n, PointSet{});
  for (int x = 0; x < n; ++x) up_[x].for_each([&](int y) { down_[y] = down_[y].with(x); });
}

std::optional<int> FinSpace::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool FinSpace::is_open(PointSet a) const { return contains(a) && open_hull(a) == a; }
bool FinSpace::is_closed(PointSet a) const { return contains(a) && closure(a) == a; }

PointSet FinSpace::open_hull(PointSet a) const {
  PointSet out;
  a.for_each([&](int x) { out |= up_[x]; });
  return out;
}

PointSet FinSpace::closure(PointSet a) const {
  PointSet out;
  a.for_each([&](int x) { out |= down_[x]; });
  return out;
}

PointSet FinSpace::minimal_points(PointSet a) const {
  PointSet out;
  a.for_each([&](int x) {
    if ((down_[x] & a) == PointSet::single(x)) out = out.with(x);
  });
  return out;
}

PointSet FinSpace::maximal_points(PointSet a) const {
  PointSet out;
  a.for_each([&](int x) {
    if ((up_[x] & a) == PointSet::single(x)) out = out.with(x);
  });
  return out;
}

PointSet FinSpace::lower_covers(int x) const { return maximal_points(down_[x].without(x)); }
PointSet FinSpace::upper_covers(int x) const { return minimal_points(up_[x].without(x)); }

PointSet FinSpace::component_of(int x, PointSet within) const {
  PointSet seen = PointSet::single(x);
  PointSet frontier = seen;
  while (!frontier.empty()) {
    PointSet next;
    frontier.for_each([&](int y) { next |= (up_[y] | down_[y]) & within; });
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

std::vector<PointSet> FinSpace::components(PointSet within) const {
  std::vector<PointSet> out;
  PointSet rest = within;
  while (!rest.empty()) {
    PointSet c = component_of(rest.lowest(), within);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

std::vector<PointSet> FinSpace::open_sets() const {
  std::vector<PointSet> out;
  enumerate_monotone_sets(*this, true, [&](PointSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> FinSpace::closed_sets() const {
  std::vector<PointSet> out;
  enumerate_monotone_sets(*this, false, [&](PointSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

FinSpace FinSpace::opposite() const {
  FinSpace s;
  s.labels_ = labels_;
  s.up_ = down_;
  s.down_ = up_;
  return s;
}

std::vector<std::pair<int, int>> FinSpace::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) upper_covers(x).for_each([&](int y) { out.emplace_back(x, y); });
  return out;
}

std::vector<std::string> FinSpace::label_list(PointSet a) const {
  std::vector<std::string> out;
  a.for_each([&](int x) { out.push_back(labels_[x]); });
  return out;
}

std::string FinSpace::format(PointSet a) const {
  std::string out = "{";
  bool first = true;
  a.for_each([&](int x) {
    if (!first) out += ",";
    out += labels_[x];
    first = false;
  });
  return out + "}";
}

PointSet FinSpace::parse_subset(std::string_view text) const {
  text = trim(text);
  if (text == "full") return all();
  PointSet out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (item.empty()) throw InputError("empty point name in subset", "subset");
    auto idx = index_of(item);
    if (!idx) throw InputError("unknown point '" + std::string(item) + "' in subset", "subset");
    out = out.with(*idx);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool preserves_order(const FinSpace& dom, const FinSpace& cod,
                     const std::vector<std::uint8_t>& image) {
  for (int x = 0; x < dom.size(); ++x) {
    const PointSet target = cod.up(image[x]);
    bool ok = true;
    dom.up(x).for_each([&](int y) { ok = ok && target.contains(image[y]); });
    if (!ok) return false;
  }
  return true;
}

ContMap::ContMap(SpacePtr dom, SpacePtr cod, std::vector<std::uint8_t> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (!dom_ || !cod_) throw InputError("map needs a domain and a codomain");
  if (static_cast<int>(image_.size()) != dom_->size())
    throw InputError("map image has " + std::to_string(image_.size()) + " entries, domain has " +
                     std::to_string(dom_->size()) + " points");
  for (auto v : image_)
    if (v >= cod_->size()) throw InputError("map value outside the codomain");
  if (!preserves_order(*dom_, *cod_, image_)) throw InputError("map is not order-preserving");
}

ContMap unchecked_map(SpacePtr dom, SpacePtr cod, std::vector<std::uint8_t> image) {
  return ContMap(ContMap::Unchecked{}, std::move(dom), std::move(cod), std::move(image));
}

ContMap ContMap::identity(const SpacePtr& space) {
  std::vector<std::uint8_t> img(space->size());
  std::iota(img.begin(), img.end(), 0);
  return unchecked_map(space, space, std::move(img));
}

ContMap ContMap::constant(const SpacePtr& dom, const SpacePtr& cod, int value) {
  if (value < 0 || value >= cod->size()) throw InputError("constant value outside the codomain");
  return unchecked_map(dom, cod, std::vector<std::uint8_t>(dom->size(), value));
}

PointSet ContMap::image_of(PointSet a) const {
  PointSet out;
  a.for_each([&](int x) { out = out.with(image_[x]); });
  return out;
}

PointSet ContMap::preimage(PointSet b) const {
  PointSet out;
  for (int x = 0; x < static_cast<int>(image_.size()); ++x)
    if (b.contains(image_[x])) out = out.with(x);
  return out;
}

bool ContMap::is_constant() const {
  return std::adjacent_find(image_.begin(), image_.end(), std::not_equal_to<>()) == image_.end();
}

ContMap ContMap::after(const ContMap& inner) const {
  if (inner.cod_->size() != dom_->size() || !(*inner.cod_ == *dom_))
    throw InputError("composition of maps with mismatched spaces");
  std::vector<std::uint8_t> img(inner.image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[inner.image_[i]];
  return unchecked_map(inner.dom_, cod_, std::move(img));
}

Subspace subspace(const SpacePtr& ambient, PointSet a) {
  if (a.empty()) throw EmptySubsetError("subspace of the empty set");
  if (!ambient->contains(a)) throw InputError("subset outside the space");
  std::vector<int> points;
  a.for_each([&](int x) { points.push_back(x); });
  const int m = static_cast<int>(points.size());
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < m; ++i) {
    labels.push_back(ambient->label(points[i]));
    for (int j = 0; j < m; ++j)
      if (i != j && ambient->leq(points[i], points[j])) less.emplace_back(i, j);
  }
  auto sub = share(FinSpace::from_indices(std::move(labels), less));
  std::vector<std::uint8_t> img(points.begin(), points.end());
  ContMap emb = unchecked_map(sub, ambient, std::move(img));
  return Subspace{std::move(sub), std::move(emb), std::move(points)};
}

FinSpace product(const FinSpace& x, const FinSpace& y) {
  const int nx = x.size();
  const int ny = y.size();
  std::vector<std::string> labels;
  bool short_labels = true;
  for (const auto& l : x.labels()) short_labels = short_labels && l.size() == 1;
  for (const auto& l : y.labels()) short_labels = short_labels && l.size() == 1;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      labels.push_back(x.label(i) + (short_labels ? "" : "_") + y.label(j));
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nx; ++k)
        for (int l = 0; l < ny; ++l)
          if ((i != k || j != l) && x.leq(i, k) && y.leq(j, l))
            less.emplace_back(i * ny + j, k * ny + l);
  return FinSpace::from_indices(std::move(labels), less);
}

namespace {

std::optional<int> parse_param(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || !name.ends_with(")")) return std::nullopt;
  std::string_view num = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  int k = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw InputError("bad parameter in builtin space '" + std::string(name) + "'", "space");
  return k;
}

FinSpace circle4() {
  return FinSpace::build({"a", "b", "c", "d"}, {{"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}});
}

}  // namespace

std::optional<FinSpace> builtin_space(std::string_view name) {
  if (auto k = parse_param(name, "chain(")) {
    if (*k < 1 || *k > kMaxPoints) throw InputError("chain size out of range", "space");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i < *k; ++i) {
      labels.push_back("p" + std::to_string(i));
      if (i > 0) less.emplace_back(i - 1, i);
    }
    return FinSpace::from_indices(std::move(labels), less);
  }
  if (auto k = parse_param(name, "antichain(")) {
    if (*k < 1 || *k > kMaxPoints) throw InputError("antichain size out of range", "space");
    std::vector<std::string> labels;
    for (int i = 0; i < *k; ++i) labels.push_back("p" + std::to_string(i));
    return FinSpace::from_indices(std::move(labels), {});
  }
  if (auto k = parse_param(name, "sphere(")) {
    if (*k < 0 || 2 * *k + 2 > kMaxPoints) throw InputError("sphere dimension out of range", "space");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> less;
    for (int level = 0; level <= *k; ++level) {
      labels.push_back("a" + std::to_string(level));
      labels.push_back("b" + std::to_string(level));
      if (level > 0)
        for (int lo : {2 * level - 2, 2 * level - 1})
          for (int hi : {2 * level, 2 * level + 1}) less.emplace_back(lo, hi);
    }
    return FinSpace::from_indices(std::move(labels), less);
  }
  if (name == "circle4") return circle4();
  if (name == "wedge2circles") {
    std::vector<std::pair<std::string, std::string>> less;
    for (const char* lo : {"x", "y", "z"})
      for (const char* hi : {"u", "v"}) less.emplace_back(lo, hi);
    return FinSpace::build({"u", "v", "x", "y", "z"}, less);
  }
  if (name == "torus16") return product(circle4(), circle4());
  return std::nullopt;
}

std::vector<std::string> builtin_space_names() {
  return {"chain(k)", "antichain(k)", "circle4", "sphere(n)", "wedge2circles", "torus16"};
}

}  // namespace lscat
