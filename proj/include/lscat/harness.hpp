#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lscat/finspace.hpp"
#include "lscat/framework.hpp"
#include "lscat/homotopy.hpp"

namespace lscat {

struct GenConfig {
  std::uint64_t seed = 1;
  int min_size = 3;
  int max_size = 7;
  double density = 0.35;
  int count = 200;
  std::size_t map_cap = 5000;
  std::uint64_t oracle_cap = 1'000'000;
  SearchLimits limits;
  /// Worker threads for the suites (0: from LSCAT_THREADS, default 1).
  int threads = 0;
};

/// Random posets: a DAG on a random vertex order with edge probability
/// `density`, transitively closed, deduplicated up to isomorphism (exactly
/// up to 10 points). The same config always yields the same list.
std::vector<FinSpace> gen_posets(const GenConfig& cfg);

/// Families that make hypotheses of the conditional theorems hold:
/// chains, antichains, spaces with a minimum (normal), disjoint unions of
/// those (normal), and spaces with added top/bottom points (beat points).
std::vector<FinSpace> targeted_spaces(const GenConfig& cfg);

bool isomorphic(const FinSpace& a, const FinSpace& b);

/// Normality: disjoint closed sets have disjoint open neighbourhoods.
/// Decided exactly through pairs of points: the space is normal iff
/// U_x ∩ U_y = ∅ whenever the closures of x and y are disjoint.
bool is_normal(const FinSpace& s);
/// The same by searching every pair of disjoint nonempty closed sets.
/// Throws SizeCapError above `max_points`.
bool is_normal_exhaustive(const FinSpace& s, int max_points = 12);

/// Aggregated outcome of one relation suite over many instances.
struct SuiteReport {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t exercised = 0;  ///< instances where the hypothesis held
  std::uint64_t skipped = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::uint64_t min_exercised = 0;  ///< coverage threshold
  std::vector<nlohmann::json> certificates;
  nlohmann::json info = nlohmann::json::object();

  bool passed() const { return violations == 0 && exercised >= min_exercised; }
  nlohmann::json to_json() const;
};

/// Runs fn(i) for i in [0, n) on `threads` workers; results in index order.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);
int threads_from_env();

/// Homotopy BFS against the enumeration oracle on random map pairs.
SuiteReport run_homotopy_oracle_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
/// Axioms of ν_H (i-v), ν_LS (i,ii,iv,v), ν_c and ν_CL (i-iv).
SuiteReport run_axiom_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
/// ν_CL ≤ ν_c ≤ ν_H on every subset (sampled above 6 points).
SuiteReport run_chain_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
/// Domination pullback inequality and invariance of ν_H under beat-point
/// removal.
SuiteReport run_lemma31_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
/// T-collections generated by the preimages of one open set, and
/// intersections/unions of two such.
SuiteReport run_tcollection_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
SuiteReport run_lemma41_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
SuiteReport run_prop42_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
SuiteReport run_cor43_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
SuiteReport run_prop33_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
/// Random (U, V, α, β) trials with α|U = 0 and β|V = 0.
SuiteReport run_prop51_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg,
                             std::uint64_t trials);
/// Beat-point retractions, identities and random maps with f* onto.
SuiteReport run_lemma57_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
/// T_{ν_CL} = T_c ∪ {∅} and ν_c = ν_{T_{ν_CL}} (spaces ≤ 8 points).
SuiteReport run_tc_identity_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);
/// ν_CL via the minimal open hull equals the definitional minimum.
SuiteReport run_nu_cl_fast_path_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg);

/// Every suite on gen_posets(cfg) + targeted_spaces(cfg). The document
/// holds no timings, so it is byte-identical for a fixed config and any
/// thread count.
nlohmann::json run_full_report(const GenConfig& cfg);

}  // namespace lscat
