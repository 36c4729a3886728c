#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "lscat/analysis.hpp"
#include "lscat/category_value.hpp"
#include "lscat/cover.hpp"
#include "lscat/finspace.hpp"

namespace lscat {

/// Axioms of a category, as bit flags: (i) monotone, (ii) subadditive,
/// (iii) open extension, (iv) homotopy monotone, (v) singletons are 1.
enum Axiom : unsigned {
  kMonotone = 1U << 0,
  kSubadditive = 1U << 1,
  kOpenExtension = 1U << 2,
  kHomotopy = 1U << 3,
  kSingleton = 1U << 4,
};
using AxiomSet = unsigned;
inline constexpr AxiomSet kAllAxioms = 0x1F;
/// Roman numeral of the axiom with index 0..4.
const char* axiom_name(int index);

/// An extensional set function ν : 2^M -> Z≥0 ∪ {∞} on one finite space.
///
/// Values are memoized per evaluator (copies share the memo table) and
/// ν(∅) = 0 always.
class CategoryFn {
 public:
  using Eval = std::function<CategoryValue(PointSet)>;

  CategoryFn(SpacePtr space, Eval eval, AxiomSet claims, std::string provenance);

  CategoryValue operator()(PointSet a) const;
  const SpacePtr& space() const { return space_; }
  AxiomSet claims() const { return claims_; }
  const std::string& provenance() const { return provenance_; }
  void clear_cache() const;

 private:
  struct Memo {
    std::mutex mu;
    std::unordered_map<PointSet, CategoryValue> values;
  };
  SpacePtr space_;
  Eval eval_;
  AxiomSet claims_;
  std::string provenance_;
  std::shared_ptr<Memo> memo_;
};

/// A set function defined on open sets only. Evaluating on a non-open set
/// throws InputError.
class PrecategoryFn {
 public:
  /// `monotone`: ν₀(U) ≤ ν₀(V) whenever U ⊆ V are open.
  PrecategoryFn(SpacePtr space, CategoryFn::Eval eval, bool monotone, std::string provenance);

  CategoryValue operator()(PointSet u) const;
  const SpacePtr& space() const { return space_; }
  bool monotone() const { return monotone_; }
  const std::string& provenance() const { return provenance_; }

 private:
  SpacePtr space_;
  CategoryFn inner_;
  bool monotone_;
  std::string provenance_;
};

/// ν̃₀(A) = min ν₀(U) over open U ⊇ A. Evaluated at the minimal open hull
/// when ν₀ is monotone, otherwise by enumerating open supersets.
CategoryFn tilde(const PrecategoryFn& nu0);
/// Always enumerates open supersets.
CategoryFn tilde_by_enumeration(const PrecategoryFn& nu0);
/// ν̄(A) = ν(closure of A).
CategoryFn bar(const CategoryFn& nu);
/// ν_T as an evaluator.
CategoryFn nu_from_T(const TCollection& t);
/// T_{ν,n} built from an evaluator (downward closed iff ν claims axiom (i)).
TCollection T_from_nu(const CategoryFn& nu, int n);

using AnalysisPtr = std::shared_ptr<const SpaceAnalysis>;

CategoryFn category_nu_H(AnalysisPtr a);
CategoryFn category_nu_LS(AnalysisPtr a);
CategoryFn category_nu_c(AnalysisPtr a);
/// ν_CL built as tilde(cuplength).
CategoryFn category_nu_CL(AnalysisPtr a);
PrecategoryFn precategory_cuplength(AnalysisPtr a);
/// T_c: cohomologically trivial open sets.
TCollection collection_T_c(AnalysisPtr a);
/// T_H: open sets contractible in the space.
TCollection collection_T_H(AnalysisPtr a);

/// Outcome of one finite verification.
struct CheckResult {
  std::string name;
  std::string status = "pass";  ///< pass | fail | skipped
  std::string mode = "exhaustive";  ///< exhaustive | sampled
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violation_count = 0;
  std::vector<nlohmann::json> certificates;  ///< first few violations
  nlohmann::json info = nlohmann::json::object();

  void fail(nlohmann::json certificate);
  bool passed() const { return status != "fail"; }
  nlohmann::json to_json() const;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

struct AxiomCheckConfig {
  /// Spaces with at most this many points are checked on every subset
  /// (and every pair for axiom (ii)); larger ones are sampled.
  int exhaustive_points = 7;
  std::size_t samples = 4000;
  std::size_t map_cap = 5000;
  std::uint64_t seed = 1;
};

/// Axioms (i)-(v) on the evaluator's space. Each violation carries a
/// certificate accepted by recheck_certificate.
CheckReport check_axioms(const CategoryFn& nu, const AxiomCheckConfig& cfg = {});

/// Re-evaluates an axiom certificate; true if the violation reproduces.
bool recheck_certificate(const CategoryFn& nu, const nlohmann::json& certificate);

/// ν(A) ≤ n·ν_{T_{ν,n}}(A) for every A (sampled on large spaces).
CheckReport check_lemma41(const CategoryFn& nu, int n);

/// T_{ν_{T_ν}} = T_ν, with the monotonicity facts it rests on
/// (T_ν ⊆ T_{ν_{T_ν}}, ν ≤ ν_{T_ν}).
CheckReport check_prop42(const CategoryFn& nu);
/// ν_{T_{ν_T}} = ν_T pointwise, and T ⊆ T_{ν_T}.
CheckReport check_prop42(const TCollection& t);

/// ν = ν_{T_ν} iff ν = ν_T for some T. Checkable direction: when `source`
/// is given and ν = ν_source, ν = ν_{T_ν} must hold.
CheckReport check_cor43(const CategoryFn& nu, const std::optional<TCollection>& source);
/// T = T_{ν_T} iff T = T_ν for some ν; when `source` is given and
/// T = T_source, T = T_{ν_T} must hold.
CheckReport check_cor43(const TCollection& t, const std::optional<CategoryFn>& source);

/// ν_LS against the closure of ν_H: step 1 always, step 2 when ν_LS has
/// axiom (iii), step 3 when the space is normal, equality when both.
CheckReport check_prop33(const AnalysisPtr& analysis);

/// Subsets used by the checkers: all of them on small spaces, a seeded
/// sample (always containing ∅, singletons and the full set) otherwise.
std::vector<PointSet> checked_subsets(const FinSpace& s, int exhaustive_points,
                                      std::size_t samples, std::uint64_t seed, bool* sampled);

/// Labelled JSON rendering of a subset / map, used in certificates.
nlohmann::json subset_json(const FinSpace& s, PointSet a);
nlohmann::json map_json(const ContMap& f);
nlohmann::json space_json(const FinSpace& s);

}  // namespace lscat
