#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lscat/finspace.hpp"

namespace lscat {

/// A simplex as its vertex indices in ascending order.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex over globally ordered vertices.
///
/// Simplices of each dimension are stored sorted lexicographically; their
/// position is the cochain coordinate. The vertex order fixes the
/// front/back faces used by the cup product.
class SimplicialComplex {
 public:
  /// Closes the given faces under taking faces. Vertices are numbered in
  /// the order of `labels`. Throws InputError on bad indices or more than
  /// kMaxPoints vertices.
  static SimplicialComplex from_faces(std::vector<std::string> labels,
                                      const std::vector<Simplex>& faces);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int d) const;
  const std::vector<Simplex>& simplices(int d) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// Vertex set of the i-th d-simplex.
  Mask support(int d, std::size_t i) const { return supports_[d][i]; }

  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  std::vector<Simplex> maximal_faces() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<Mask>> supports_;
  std::map<Simplex, std::size_t> index_;
};

/// Chains of the poset, vertex i = point i.
SimplicialComplex order_complex(const FinSpace& space);

/// Nonempty simplices ordered by inclusion, labelled by vertex lists
/// ("1", "12", ... or "v1|v2" when vertex labels are longer than one
/// character).
FinSpace face_poset(const SimplicialComplex& k);

/// "rp2_6" and "torus7"; nullopt for unknown names. Read from the shipped
/// data files.
std::optional<SimplicialComplex> builtin_complex(std::string_view name);
std::vector<std::string> builtin_complex_names();

}  // namespace lscat
