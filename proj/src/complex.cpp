#include "lscat/complex.hpp"

#include <algorithm>
#include <set>

#include "lscat/error.hpp"

namespace lscat {

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels,
                                                const std::vector<Simplex>& faces) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxPoints)
    throw InputError("complex has " + std::to_string(n) + " vertices; the limit is " +
                     std::to_string(kMaxPoints));
  std::vector<std::set<Simplex>> by_dim;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Simplex s = faces[f];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    for (int v : s)
      if (v < 0 || v >= n)
        throw InputError("vertex index out of range", "maximal_faces[" + std::to_string(f) + "]");
    if (s.size() > 20) throw InputError("face dimension too large", "maximal_faces");
    const std::size_t m = s.size();
    for (std::uint32_t sub = 1; sub < (1U << m); ++sub) {
      Simplex face;
      for (std::size_t i = 0; i < m; ++i)
        if ((sub >> i) & 1U) face.push_back(s[i]);
      if (by_dim.size() < face.size()) by_dim.resize(face.size());
      by_dim[face.size() - 1].insert(std::move(face));
    }
  }
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (auto& layer : by_dim) {
    k.simplices_.emplace_back(layer.begin(), layer.end());
    std::vector<Mask> sup;
    for (const auto& s : k.simplices_.back()) {
      Mask m = 0;
      for (int v : s) m |= Mask{1} << v;
      sup.push_back(m);
    }
    k.supports_.push_back(std::move(sup));
  }
  for (const auto& layer : k.simplices_)
    for (std::size_t i = 0; i < layer.size(); ++i) k.index_.emplace(layer[i], i);
  return k;
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return simplices_[d].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> kEmpty;
  if (d < 0 || d > dimension()) return kEmpty;
  return simplices_[d];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& layer : simplices_) f.push_back(layer.size());
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
  return chi;
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
  std::vector<Simplex> out;
  for (int d = dimension(); d >= 0; --d)
    for (std::size_t i = 0; i < count(d); ++i) {
      bool covered = false;
      for (int e = d + 1; e <= dimension() && !covered; ++e)
        for (std::size_t j = 0; j < count(e) && !covered; ++j)
          covered = (supports_[d][i] & ~supports_[e][j]) == 0;
      if (!covered) out.push_back(simplices_[d][i]);
    }
  return out;
}

SimplicialComplex order_complex(const FinSpace& space) {
  const int n = space.size();
  std::vector<Simplex> chains;
  Simplex chain;
  // Extends the chain with larger-index points comparable to every member.
  auto rec = [&](auto&& self, int next, PointSet allowed) -> void {
    bool extended = false;
    for (int v = next; v < n; ++v) {
      if (!allowed.contains(v)) continue;
      extended = true;
      chain.push_back(v);
      self(self, v + 1, allowed & (space.up(v) | space.down(v)));
      chain.pop_back();
    }
    if (!extended && !chain.empty()) chains.push_back(chain);
  };
  rec(rec, 0, space.all());
  return SimplicialComplex::from_faces(space.labels(), chains);
}

FinSpace face_poset(const SimplicialComplex& k) {
  bool short_labels = true;
  for (const auto& l : k.labels()) short_labels = short_labels && l.size() == 1;
  std::vector<std::string> labels;
  std::vector<Mask> supports;
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      std::string name;
      for (int v : k.simplices(d)[i]) {
        if (!short_labels && !name.empty()) name += "|";
        name += k.label(v);
      }
      labels.push_back(std::move(name));
      supports.push_back(k.support(d, i));
    }
  std::vector<std::pair<int, int>> less;
  for (int a = 0; a < static_cast<int>(supports.size()); ++a)
    for (int b = 0; b < static_cast<int>(supports.size()); ++b)
      if (a != b && (supports[a] & ~supports[b]) == 0) less.emplace_back(a, b);
  return FinSpace::from_indices(std::move(labels), less);
}

}  // namespace lscat
