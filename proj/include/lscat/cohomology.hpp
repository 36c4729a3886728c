#pragma once

#include <vector>

#include "lscat/bitvec.hpp"
#include "lscat/complex.hpp"
#include "lscat/finspace.hpp"

namespace lscat {

/// A cohomology class over F2, carried by a cocycle representative.
/// Coordinates refer to the simplices of the owning ring's complex.
struct CohomClass {
  int degree = 0;
  BitVec cocycle;
};

/// Simplicial cochains of a complex over F2, with cohomology bases and the
/// Alexander-Whitney cup product.
///
/// Everything is computed at construction; the object is immutable after.
/// Subsets of vertices stand for induced subcomplexes; for the order complex
/// of a finite space the induced subcomplex on A is the order complex of
/// the subspace A.
class CohomologyRing {
 public:
  explicit CohomologyRing(SimplicialComplex k);

  const SimplicialComplex& complex() const { return k_; }
  int top_degree() const { return k_.dimension(); }

  BitVec zero_cochain(int d) const { return BitVec(k_.count(d)); }
  /// δ: C^d -> C^{d+1}.
  BitVec coboundary(int d, const BitVec& c) const;

  int betti(int d) const;
  std::vector<int> betti_numbers() const;
  const std::vector<CohomClass>& basis(int d) const;
  std::vector<CohomClass> positive_basis() const;

  bool is_cocycle(const CohomClass& c) const;
  bool is_coboundary(int d, const BitVec& c) const;
  /// Coordinates of a cocycle's class in basis(d).
  BitVec coordinates(const CohomClass& c) const;
  bool same_class(const CohomClass& a, const CohomClass& b) const;
  bool is_zero_class(const CohomClass& c) const;
  CohomClass from_coordinates(int d, const BitVec& coords) const;

  /// Unit of H^0: the all-ones 0-cochain.
  CohomClass unit() const;
  CohomClass zero(int d) const { return {d, zero_cochain(d)}; }
  CohomClass cup(const CohomClass& a, const CohomClass& b) const;

  /// Cocycle restricted to the subcomplex on `vertices` (zero outside it).
  CohomClass restrict(const CohomClass& c, Mask vertices) const;
  /// Whether the restriction is zero in the cohomology of the subcomplex.
  bool vanishes_on(const CohomClass& c, Mask vertices) const;

  /// Restriction to the subcomplex kills every positive-degree class.
  bool is_cohomologically_trivial(Mask vertices) const;
  /// Least N ≥ 1 such that every N-fold cup product of positive-degree
  /// classes restricts to zero on the subcomplex.
  int cuplength(Mask vertices) const;

  /// layers()[k] is a basis (in cohomology) of the span of all (k+1)-fold
  /// products of positive-degree classes; the last layer is empty.
  const std::vector<std::vector<CohomClass>>& product_layers() const { return layers_; }

 private:
  BitVec subcomplex_mask(int d, Mask vertices) const;
  void build_layers();

  SimplicialComplex k_;
  std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
  std::vector<std::vector<CohomClass>> basis_;
  std::vector<F2Echelon> coords_;
  std::vector<std::vector<CohomClass>> layers_;
};

/// Cohomology of a finite space through its order complex.
inline CohomologyRing space_cohomology(const FinSpace& s) { return CohomologyRing(order_complex(s)); }

/// f^* of a class of `cod_ring` (order complex of f.cod()) to `dom_ring`
/// (order complex of f.dom()), through the induced simplicial map.
CohomClass pullback(const ContMap& f, const CohomologyRing& dom_ring,
                    const CohomologyRing& cod_ring, const CohomClass& c);

/// f^*: H^k(cod) -> H^k(dom) is onto for every k > 0.
bool pullback_surjective_positive(const ContMap& f, const CohomologyRing& dom_ring,
                                  const CohomologyRing& cod_ring);

enum class Prop51Outcome { holds, violated, precondition_unmet };

const char* to_string(Prop51Outcome o);

/// If a|U = 0 and b|V = 0, checks (a ∪ b)|(U∪V) = 0. U and V must be open
/// in the underlying finite space (so the subcomplex on U∪V is the union
/// of the two subcomplexes).
Prop51Outcome check_prop51(const CohomologyRing& ring, Mask u, Mask v, const CohomClass& a,
                           const CohomClass& b);

struct Lemma57Report {
  bool surjective = false;  ///< false: instance skipped
  std::size_t checked = 0;
  std::vector<PointSet> violations;  ///< sets A with cuplength(A) > cuplength(f(A))
};

/// For every nonempty A ⊆ dom: cuplength(A) ≤ cuplength(f(A)), provided f^*
/// is onto in positive degrees.
Lemma57Report check_lemma57(const ContMap& f, const CohomologyRing& dom_ring,
                            const CohomologyRing& cod_ring);

}  // namespace lscat
