#pragma once

// Random instances and brute-force oracles shared by the tests. The oracles
// deliberately avoid the library's algorithms: they enumerate everything.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lscat/cohomology.hpp"
#include "lscat/complex.hpp"
#include "lscat/finspace.hpp"

namespace lscat::oracle {

inline FinSpace random_space(std::mt19937_64& rng, int n, double density = 0.35) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> less;
  std::bernoulli_distribution edge(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) less.emplace_back(order[i], order[j]);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return FinSpace::from_indices(labels, less);
}

/// `s` with an extra point above everything (a cone).
inline FinSpace with_top(const FinSpace& s) {
  std::vector<std::pair<int, int>> less;
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y)
      if (x != y && s.leq(x, y)) less.emplace_back(x, y);
    less.emplace_back(x, s.size());
  }
  auto labels = s.labels();
  labels.push_back("top");
  return FinSpace::from_indices(labels, less);
}

inline bool brute_is_open(const FinSpace& s, PointSet a) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (a.contains(x) && s.leq(x, y) && !a.contains(y)) return false;
  return true;
}

inline bool brute_is_closed(const FinSpace& s, PointSet a) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (a.contains(x) && s.leq(y, x) && !a.contains(y)) return false;
  return true;
}

inline std::vector<PointSet> brute_opens(const FinSpace& s) {
  std::vector<PointSet> out;
  for (Mask m = 0; m < (Mask{1} << s.size()); ++m)
    if (brute_is_open(s, PointSet(m))) out.push_back(PointSet(m));
  return out;
}

inline std::vector<PointSet> brute_closeds(const FinSpace& s) {
  std::vector<PointSet> out;
  for (Mask m = 0; m < (Mask{1} << s.size()); ++m)
    if (brute_is_closed(s, PointSet(m))) out.push_back(PointSet(m));
  return out;
}

/// Every order-preserving map, by filtering all |cod|^|dom| functions.
inline std::vector<std::vector<std::uint8_t>> brute_maps(const FinSpace& dom, const FinSpace& cod) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> img(dom.size(), 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < dom.size() && ok; ++x)
      for (int y = 0; y < dom.size() && ok; ++y)
        if (dom.leq(x, y) && !cod.leq(img[x], img[y])) ok = false;
    if (ok) out.push_back(img);
    int i = 0;
    while (i < dom.size() && ++img[i] == cod.size()) img[i++] = 0;
    if (i == dom.size()) break;
  }
  return out;
}

/// f ≃ g iff f and g are joined by a fence of pointwise comparable maps.
inline bool brute_homotopic(const FinSpace& dom, const FinSpace& cod,
                            const std::vector<std::uint8_t>& f, const std::vector<std::uint8_t>& g) {
  const auto maps = brute_maps(dom, cod);
  auto leq = [&](const auto& a, const auto& b) {
    for (int x = 0; x < dom.size(); ++x)
      if (!cod.leq(a[x], b[x])) return false;
    return true;
  };
  std::vector<bool> seen(maps.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i] == f) {
      seen[i] = true;
      queue.push_back(i);
    }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (maps[i] == g) return true;
    for (std::size_t j = 0; j < maps.size(); ++j)
      if (!seen[j] && (leq(maps[i], maps[j]) || leq(maps[j], maps[i]))) {
        seen[j] = true;
        queue.push_back(j);
      }
  }
  return false;
}

/// Inclusion of nonempty A homotopic to some constant map.
inline bool brute_contractible(const SpacePtr& space, PointSet a) {
  const Subspace sub = subspace(space, a);
  const auto& inc = sub.embedding.image();
  for (int y = 0; y < space->size(); ++y) {
    std::vector<std::uint8_t> c(inc.size(), static_cast<std::uint8_t>(y));
    if (brute_homotopic(*sub.space, *space, inc, c)) return true;
  }
  return false;
}

/// Least number of family members covering A; nullopt if impossible.
inline std::optional<int> brute_min_cover(PointSet a, const std::vector<PointSet>& family) {
  if (a.empty()) return 0;
  const std::size_t n = family.size();
  std::optional<int> best;
  for (Mask pick = 1; pick < (Mask{1} << n); ++pick) {
    PointSet u;
    for (std::size_t i = 0; i < n; ++i)
      if ((pick >> i) & 1U) u |= family[i];
    const int k = std::popcount(pick);
    if (a.subset_of(u) && (!best || k < *best)) best = k;
  }
  return best;
}

// --- F2 linear algebra on dense 0/1 rows -----------------------------------

using Row = std::vector<std::uint8_t>;

inline int rank_f2(std::vector<Row> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

inline Mask simplex_mask(const Simplex& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

/// Simplices of dimension d whose vertices lie in `vertices`.
inline std::vector<Simplex> simplices_in(const SimplicialComplex& k, int d, Mask vertices) {
  std::vector<Simplex> out;
  if (d < 0 || d > k.dimension()) return out;
  for (const auto& s : k.simplices(d))
    if ((simplex_mask(s) & ~vertices) == 0) out.push_back(s);
  return out;
}

/// Rows of δ: C^{d}(L) -> C^{d+1}(L) for the induced subcomplex L, one row
/// per d-simplex (the image of its indicator cochain).
inline std::vector<Row> coboundary_rows(const SimplicialComplex& k, int d, Mask vertices) {
  const auto lower = simplices_in(k, d, vertices);
  const auto upper = simplices_in(k, d + 1, vertices);
  std::vector<Row> rows;
  for (const auto& s : lower) {
    Row r(upper.size(), 0);
    for (std::size_t j = 0; j < upper.size(); ++j)
      if (std::includes(upper[j].begin(), upper[j].end(), s.begin(), s.end())) r[j] = 1;
    rows.push_back(r);
  }
  return rows;
}

inline std::vector<int> brute_betti(const SimplicialComplex& k, Mask vertices = ~Mask{0}) {
  std::vector<int> out;
  for (int d = 0; d <= k.dimension(); ++d) {
    const int cd = static_cast<int>(simplices_in(k, d, vertices).size());
    const int rank_out = d + 1 <= k.dimension() ? rank_f2(coboundary_rows(k, d, vertices)) : 0;
    const int rank_in = d > 0 ? rank_f2(coboundary_rows(k, d - 1, vertices)) : 0;
    out.push_back(cd - rank_out - rank_in);
  }
  return out;
}

/// A cochain of the full complex restricted to the simplices inside `vertices`.
inline Row restrict_cochain(const SimplicialComplex& k, int d, const BitVec& c, Mask vertices) {
  Row r;
  for (std::size_t i = 0; i < k.count(d); ++i)
    if ((simplex_mask(k.simplices(d)[i]) & ~vertices) == 0) r.push_back(c.get(i) ? 1 : 0);
  return r;
}

/// Whether a d-cochain (given on the induced subcomplex) is a coboundary there.
inline bool brute_is_coboundary(const SimplicialComplex& k, int d, const Row& c, Mask vertices) {
  if (std::none_of(c.begin(), c.end(), [](auto v) { return v != 0; })) return true;
  if (d == 0) return false;
  auto rows = coboundary_rows(k, d - 1, vertices);
  const int before = rank_f2(rows);
  rows.push_back(c);
  return rank_f2(rows) == before;
}

/// Alexander-Whitney product of cochains, straight from the definition.
inline BitVec brute_cup(const SimplicialComplex& k, int p, const BitVec& a, int q, const BitVec& b) {
  BitVec out(k.count(p + q));
  if (p + q > k.dimension()) return BitVec(0);
  for (std::size_t i = 0; i < k.count(p + q); ++i) {
    const Simplex& s = k.simplices(p + q)[i];
    const Simplex front(s.begin(), s.begin() + p + 1);
    const Simplex back(s.begin() + p, s.end());
    if (a.get(*k.index_of(front)) && b.get(*k.index_of(back))) out.set(i);
  }
  return out;
}

/// 1 + the longest nonzero product of positive-degree basis classes
/// restricted to `vertices` (0 on the empty set).
inline int brute_cuplength(const CohomologyRing& ring, Mask vertices) {
  const SimplicialComplex& k = ring.complex();
  if ((vertices & ((k.vertex_count() >= 64 ? ~Mask{0} : (Mask{1} << k.vertex_count()) - 1))) == 0)
    return 0;
  const auto basis = ring.positive_basis();
  int longest = 0;
  // Depth-first over products, pruning products that are already zero as
  // cochain classes on the subcomplex.
  auto rec = [&](auto&& self, int degree, const BitVec& c, int length) -> void {
    if (length > 0 && brute_is_coboundary(k, degree, restrict_cochain(k, degree, c, vertices), vertices))
      return;
    longest = std::max(longest, length);
    for (const auto& b : basis) {
      if (degree + b.degree > k.dimension()) continue;
      self(self, degree + b.degree, length == 0 ? b.cocycle : brute_cup(k, degree, c, b.degree, b.cocycle),
           length + 1);
    }
  };
  rec(rec, 0, BitVec(k.count(0)), 0);
  return longest + 1;
}

}  // namespace lscat::oracle
