#include "lscat/cohomology.hpp"

#include <algorithm>

#include "lscat/error.hpp"

namespace lscat {

CohomologyRing::CohomologyRing(SimplicialComplex k) : k_(std::move(k)) {
  const int top = k_.dimension();
  cofaces_.resize(std::max(top + 1, 0));
  for (int d = 0; d <= top; ++d) cofaces_[d].resize(k_.count(d));
  for (int d = 1; d <= top; ++d) {
    const auto& layer = k_.simplices(d);
    for (std::size_t t = 0; t < layer.size(); ++t)
      for (std::size_t drop = 0; drop < layer[t].size(); ++drop) {
        Simplex face = layer[t];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        cofaces_[d - 1][*k_.index_of(face)].push_back(t);
      }
  }

  basis_.resize(std::max(top + 1, 0));
  for (int d = 0; d <= top; ++d) {
    const std::size_t n = k_.count(d);
    // Coboundaries B^d.
    std::vector<BitVec> boundaries;
    if (d > 0)
      for (std::size_t s = 0; s < k_.count(d - 1); ++s) {
        BitVec e = zero_cochain(d - 1);
        e.set(s);
        boundaries.push_back(coboundary(d - 1, e));
      }
    // Cocycles Z^d: kernel of δ_d via tagged elimination.
    std::vector<BitVec> cycles;
    F2Echelon images(k_.count(d + 1), n);
    for (std::size_t i = 0; i < n; ++i) {
      BitVec e(n);
      e.set(i);
      auto red = images.reduce(coboundary(d, e));
      BitVec tag = red.tag ^ e;
      if (red.residual.none())
        cycles.push_back(std::move(tag));
      else
        images.insert(std::move(red.residual), std::move(tag));
    }
    F2Echelon quotient(n, 0);
    for (const auto& b : boundaries) quotient.insert(b);
    for (auto& z : cycles)
      if (quotient.insert(z)) basis_[d].push_back({d, std::move(z)});

    const std::size_t rank = basis_[d].size();
    F2Echelon coords(n, rank);
    for (const auto& b : boundaries) coords.insert(b, BitVec(rank));
    for (std::size_t j = 0; j < rank; ++j) {
      BitVec tag(rank);
      tag.set(j);
      coords.insert(basis_[d][j].cocycle, std::move(tag));
    }
    coords_.push_back(std::move(coords));
  }
  build_layers();
}

BitVec CohomologyRing::coboundary(int d, const BitVec& c) const {
  BitVec out = zero_cochain(d + 1);
  if (d < 0 || d >= k_.dimension()) return out;
  for (std::size_t i = 0; i < k_.count(d); ++i)
    if (c.get(i))
      for (std::size_t t : cofaces_[d][i]) out.flip(t);
  return out;
}

int CohomologyRing::betti(int d) const {
  if (d < 0 || d > top_degree()) return 0;
  return static_cast<int>(basis_[d].size());
}

std::vector<int> CohomologyRing::betti_numbers() const {
  std::vector<int> out;
  for (int d = 0; d <= top_degree(); ++d) out.push_back(betti(d));
  return out;
}

const std::vector<CohomClass>& CohomologyRing::basis(int d) const {
  static const std::vector<CohomClass> kEmpty;
  if (d < 0 || d > top_degree()) return kEmpty;
  return basis_[d];
}

std::vector<CohomClass> CohomologyRing::positive_basis() const {
  std::vector<CohomClass> out;
  for (int d = 1; d <= top_degree(); ++d)
    out.insert(out.end(), basis_[d].begin(), basis_[d].end());
  return out;
}

bool CohomologyRing::is_cocycle(const CohomClass& c) const {
  return coboundary(c.degree, c.cocycle).none();
}

bool CohomologyRing::is_coboundary(int d, const BitVec& c) const {
  if (d <= 0 || d > top_degree()) return c.none();
  // A coboundary reduces to zero with an all-zero tag.
  auto red = coords_[d].reduce(c);
  return red.residual.none() && red.tag.none();
}

BitVec CohomologyRing::coordinates(const CohomClass& c) const {
  if (c.degree < 0 || c.degree > top_degree()) return BitVec(0);
  auto red = coords_[c.degree].reduce(c.cocycle);
  if (red.residual.any()) throw Error("coordinates requested for a cochain that is not a cocycle");
  return red.tag;
}

bool CohomologyRing::same_class(const CohomClass& a, const CohomClass& b) const {
  if (a.degree != b.degree) return is_zero_class(a) && is_zero_class(b);
  return coordinates(a) == coordinates(b);
}

bool CohomologyRing::is_zero_class(const CohomClass& c) const { return coordinates(c).none(); }

CohomClass CohomologyRing::from_coordinates(int d, const BitVec& coords) const {
  CohomClass out = zero(d);
  for (std::size_t j = 0; j < basis(d).size(); ++j)
    if (coords.get(j)) out.cocycle ^= basis_[d][j].cocycle;
  return out;
}

CohomClass CohomologyRing::unit() const {
  CohomClass one = zero(0);
  for (std::size_t i = 0; i < k_.count(0); ++i) one.cocycle.set(i);
  return one;
}

CohomClass CohomologyRing::cup(const CohomClass& a, const CohomClass& b) const {
  const int p = a.degree;
  const int q = b.degree;
  CohomClass out = zero(p + q);
  if (p + q > top_degree()) return out;
  const auto& layer = k_.simplices(p + q);
  for (std::size_t s = 0; s < layer.size(); ++s) {
    const Simplex& sigma = layer[s];
    const Simplex front(sigma.begin(), sigma.begin() + p + 1);
    if (!a.cocycle.get(*k_.index_of(front))) continue;
    const Simplex back(sigma.begin() + p, sigma.end());
    if (b.cocycle.get(*k_.index_of(back))) out.cocycle.set(s);
  }
  return out;
}

BitVec CohomologyRing::subcomplex_mask(int d, Mask vertices) const {
  BitVec m = zero_cochain(d);
  for (std::size_t i = 0; i < k_.count(d); ++i)
    if ((k_.support(d, i) & ~vertices) == 0) m.set(i);
  return m;
}

CohomClass CohomologyRing::restrict(const CohomClass& c, Mask vertices) const {
  if (c.degree < 0 || c.degree > top_degree()) return c;
  return {c.degree, c.cocycle & subcomplex_mask(c.degree, vertices)};
}

bool CohomologyRing::vanishes_on(const CohomClass& c, Mask vertices) const {
  const int d = c.degree;
  if (d < 0 || d > top_degree()) return true;
  const BitVec restricted = c.cocycle & subcomplex_mask(d, vertices);
  if (restricted.none()) return true;
  if (d == 0) return false;
  const BitVec rows = subcomplex_mask(d, vertices);
  F2Echelon span(k_.count(d), 0);
  for (std::size_t s = 0; s < k_.count(d - 1); ++s) {
    if ((k_.support(d - 1, s) & ~vertices) != 0) continue;
    BitVec col = zero_cochain(d);
    for (std::size_t t : cofaces_[d - 1][s]) col.set(t);
    span.insert(col & rows);
  }
  return span.in_span(restricted);
}

bool CohomologyRing::is_cohomologically_trivial(Mask vertices) const {
  for (int d = 1; d <= top_degree(); ++d)
    for (const auto& c : basis_[d])
      if (!vanishes_on(c, vertices)) return false;
  return true;
}

int CohomologyRing::cuplength(Mask vertices) const {
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const bool all_zero = std::all_of(layers_[k].begin(), layers_[k].end(),
                                      [&](const CohomClass& c) { return vanishes_on(c, vertices); });
    if (all_zero) return static_cast<int>(k) + 1;
  }
  return static_cast<int>(layers_.size()) + 1;
}

void CohomologyRing::build_layers() {
  const auto generators = positive_basis();
  std::vector<CohomClass> current = generators;
  while (true) {
    layers_.push_back(current);
    if (current.empty()) break;
    // Independent classes among all products v ∪ g, per degree.
    std::vector<F2Echelon> seen;
    for (int d = 0; d <= top_degree(); ++d) seen.emplace_back(std::max(betti(d), 0), 0);
    std::vector<CohomClass> next;
    for (const auto& v : current)
      for (const auto& g : generators) {
        CohomClass prod = cup(v, g);
        if (prod.degree > top_degree()) continue;
        const BitVec coords = coordinates(prod);
        if (coords.none()) continue;
        if (seen[prod.degree].insert(coords)) next.push_back(std::move(prod));
      }
    current = std::move(next);
  }
}

// ---------------------------------------------------------------------------

CohomClass pullback(const ContMap& f, const CohomologyRing& dom_ring,
                    const CohomologyRing& cod_ring, const CohomClass& c) {
  const SimplicialComplex& kx = dom_ring.complex();
  const SimplicialComplex& ky = cod_ring.complex();
  CohomClass out = dom_ring.zero(c.degree);
  if (c.degree > ky.dimension()) return out;
  const auto& layer = kx.simplices(c.degree);
  for (std::size_t s = 0; s < layer.size(); ++s) {
    Simplex img;
    for (int v : layer[s]) img.push_back(f(v));
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;
    const auto idx = ky.index_of(img);
    if (!idx) throw Error("pullback: image of a chain is not a simplex of the codomain complex");
    if (c.cocycle.get(*idx)) out.cocycle.set(s);
  }
  return out;
}

bool pullback_surjective_positive(const ContMap& f, const CohomologyRing& dom_ring,
                                  const CohomologyRing& cod_ring) {
  for (int d = 1; d <= dom_ring.top_degree(); ++d) {
    const int target = dom_ring.betti(d);
    if (target == 0) continue;
    F2Echelon image(static_cast<std::size_t>(target), 0);
    for (const auto& c : cod_ring.basis(d))
      image.insert(dom_ring.coordinates(pullback(f, dom_ring, cod_ring, c)));
    if (static_cast<int>(image.rank()) != target) return false;
  }
  return true;
}

const char* to_string(Prop51Outcome o) {
  switch (o) {
    case Prop51Outcome::holds: return "holds";
    case Prop51Outcome::violated: return "violated";
    case Prop51Outcome::precondition_unmet: return "precondition_unmet";
  }
  return "?";
}

Prop51Outcome check_prop51(const CohomologyRing& ring, Mask u, Mask v, const CohomClass& a,
                           const CohomClass& b) {
  if (!ring.vanishes_on(a, u) || !ring.vanishes_on(b, v)) return Prop51Outcome::precondition_unmet;
  return ring.vanishes_on(ring.cup(a, b), u | v) ? Prop51Outcome::holds : Prop51Outcome::violated;
}

Lemma57Report check_lemma57(const ContMap& f, const CohomologyRing& dom_ring,
                            const CohomologyRing& cod_ring) {
  Lemma57Report report;
  report.surjective = pullback_surjective_positive(f, dom_ring, cod_ring);
  if (!report.surjective) return report;
  const PointSet all = f.dom()->all();
  for_each_subset(all, [&](PointSet a) {
    if (a.empty()) return;
    ++report.checked;
    if (dom_ring.cuplength(a.bits()) > cod_ring.cuplength(f.image_of(a).bits()))
      report.violations.push_back(a);
  });
  return report;
}

}  // namespace lscat
