#include "lscat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "lscat/analysis.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/cover.hpp"
#include "lscat/error.hpp"

namespace lscat {

using json = nlohmann::json;

namespace {

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::vector<std::string> point_labels(int n, const std::string& prefix = "p") {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Strict relations of a random DAG on n points in a random vertex order.
std::vector<std::pair<int, int>> random_dag(std::mt19937_64& rng, int n, double density) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[pick(rng, i + 1)]);
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit_real(rng) < density) less.emplace_back(order[i], order[j]);
  return less;
}

FinSpace random_poset(std::mt19937_64& rng, int n, double density) {
  return FinSpace::from_indices(point_labels(n), random_dag(rng, n, density));
}

std::vector<std::pair<int, int>> strict_pairs(const FinSpace& s, int offset = 0) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (x != y && s.leq(x, y)) out.emplace_back(x + offset, y + offset);
  return out;
}

// `s` with a new point below (or above) every point.
FinSpace with_extreme(const FinSpace& s, bool below) {
  auto less = strict_pairs(s);
  const int e = s.size();
  for (int x = 0; x < s.size(); ++x) less.emplace_back(below ? e : x, below ? x : e);
  return FinSpace::from_indices(point_labels(s.size() + 1), less);
}

// `s` with a new point covering exactly `x` (or covered by exactly `x`).
FinSpace with_pendant(const FinSpace& s, int x, bool above) {
  auto less = strict_pairs(s);
  const int e = s.size();
  for (int y = 0; y < s.size(); ++y) {
    if (above && s.leq(y, x)) less.emplace_back(y, e);
    if (!above && s.leq(x, y)) less.emplace_back(e, y);
  }
  return FinSpace::from_indices(point_labels(s.size() + 1), less);
}

FinSpace disjoint_union(const FinSpace& a, const FinSpace& b) {
  auto less = strict_pairs(a);
  for (auto p : strict_pairs(b, a.size())) less.push_back(p);
  return FinSpace::from_indices(point_labels(a.size() + b.size()), less);
}

// Per-point invariants preserved by isomorphisms.
std::vector<std::pair<int, int>> point_signature(const FinSpace& s) {
  std::vector<std::pair<int, int>> sig;
  for (int x = 0; x < s.size(); ++x) sig.emplace_back(s.up(x).size(), s.down(x).size());
  return sig;
}

std::vector<std::pair<int, int>> sorted_signature(const FinSpace& s) {
  auto sig = point_signature(s);
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Keeps spaces not isomorphic to an earlier one. Above 10 points only the
// signature is compared, so distinct spaces may be dropped.
class Dedup {
 public:
  bool insert(const FinSpace& s) {
    auto& bucket = buckets_[sorted_signature(s)];
    for (const FinSpace& t : bucket)
      if (s.size() > 10 || isomorphic(s, t)) return false;
    bucket.push_back(s);
    return true;
  }

 private:
  std::map<std::vector<std::pair<int, int>>, std::vector<FinSpace>> buckets_;
};

struct Partial {
  bool exercised = false;
  bool skipped = false;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::vector<json> certificates;
  std::map<std::string, std::uint64_t> counters;
};

constexpr std::size_t kMaxCertificates = 5;

void add_certificate(Partial& p, json cert) {
  ++p.violations;
  if (p.certificates.size() < kMaxCertificates) p.certificates.push_back(std::move(cert));
}

void absorb(Partial& p, const CheckResult& c, const std::string& prefix = "") {
  p.checks += c.checked;
  p.violations += c.violation_count;
  for (const auto& cert : c.certificates)
    if (p.certificates.size() < kMaxCertificates)
      p.certificates.push_back({{"check", prefix + c.name}, {"certificate", cert}});
}

void absorb(Partial& p, const CheckReport& r) {
  for (const auto& c : r.checks) absorb(p, c, r.subject + ": ");
}

int resolve_threads(const GenConfig& cfg) { return cfg.threads > 0 ? cfg.threads : threads_from_env(); }

// Runs fn on every instance and merges the partial results in index order.
SuiteReport collect(std::string name, std::size_t n, const GenConfig& cfg,
                    std::uint64_t min_exercised,
                    const std::function<Partial(std::size_t)>& fn,
                    const std::function<json(std::size_t)>& describe) {
  std::vector<Partial> parts(n);
  parallel_for(n, resolve_threads(cfg), [&](std::size_t i) {
    try {
      parts[i] = fn(i);
    } catch (const UndecidedError&) {
      parts[i] = Partial{};
      parts[i].skipped = true;
      parts[i].counters["undecided"] = 1;
    }
  });
  SuiteReport out;
  out.name = std::move(name);
  out.instances = n;
  out.min_exercised = min_exercised;
  std::map<std::string, std::uint64_t> counters;
  for (std::size_t i = 0; i < n; ++i) {
    const Partial& p = parts[i];
    out.exercised += p.exercised ? 1 : 0;
    out.skipped += p.skipped ? 1 : 0;
    out.checks += p.checks;
    out.violations += p.violations;
    for (const auto& [k, v] : p.counters) counters[k] += v;
    for (const auto& cert : p.certificates)
      if (out.certificates.size() < kMaxCertificates)
        out.certificates.push_back({{"instance", i}, {"subject", describe(i)}, {"violation", cert}});
  }
  for (const auto& [k, v] : counters) out.info[k] = v;
  return out;
}

std::function<json(std::size_t)> describe_spaces(const std::vector<SpacePtr>& spaces) {
  return [&spaces](std::size_t i) { return space_json(*spaces[i]); };
}

std::vector<SpacePtr> share_all(const std::vector<FinSpace>& spaces, int max_points = kMaxPoints) {
  std::vector<SpacePtr> out;
  for (const auto& s : spaces)
    if (s.size() <= max_points) out.push_back(share(s));
  return out;
}

AnalysisPtr analyse(const SpacePtr& s, const GenConfig& cfg) {
  return std::make_shared<const SpaceAnalysis>(s, cfg.limits);
}

json value_json(CategoryValue v) {
  return v.is_infinite() ? json("inf") : json(v.value());
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<FinSpace> gen_posets(const GenConfig& cfg) {
  if (cfg.min_size < 1 || cfg.max_size < cfg.min_size || cfg.max_size > kMaxPoints)
    throw InputError("invalid size range", "sizes");
  std::mt19937_64 rng(cfg.seed);
  std::vector<FinSpace> out;
  Dedup seen;
  const int span = cfg.max_size - cfg.min_size + 1;
  const std::size_t attempts = static_cast<std::size_t>(std::max(cfg.count, 0)) * 50 + 100;
  for (std::size_t k = 0; k < attempts && static_cast<int>(out.size()) < cfg.count; ++k) {
    const int n = cfg.min_size + static_cast<int>(pick(rng, span));
    FinSpace s = random_poset(rng, n, cfg.density);
    if (seen.insert(s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<FinSpace> targeted_spaces(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995ULL);
  const int lo = std::max(cfg.min_size, 2);
  const int hi = std::max(cfg.max_size, lo);
  std::vector<FinSpace> out;
  Dedup seen;
  auto add = [&](FinSpace s) {
    if (s.size() <= hi && seen.insert(s)) out.push_back(std::move(s));
  };
  for (int k = lo; k <= std::min(hi, 6); ++k) add(*builtin_space("chain(" + std::to_string(k) + ")"));
  for (int k = lo; k <= std::min(hi, 5); ++k) add(*builtin_space("antichain(" + std::to_string(k) + ")"));
  for (const char* name : {"circle4", "wedge2circles", "sphere(2)"})
    if (auto s = builtin_space(name)) add(*s);
  auto random_size = [&](int a, int b) { return a + static_cast<int>(pick(rng, b - a + 1)); };
  // Spaces with a minimum, and disjoint unions of those, are normal.
  for (int k = 0; k < 30; ++k) add(with_extreme(random_poset(rng, random_size(1, hi - 1), cfg.density), true));
  for (int k = 0; k < 20 && hi >= 4; ++k) {
    const int a = random_size(2, hi - 2);
    const int b = random_size(2, hi - a);
    add(disjoint_union(with_extreme(random_poset(rng, a - 1, cfg.density), true),
                       with_extreme(random_poset(rng, b - 1, cfg.density), true)));
  }
  // Beat-point-rich spaces: a cone point on top, or a pendant point.
  for (int k = 0; k < 20; ++k) {
    FinSpace base = random_poset(rng, random_size(1, hi - 1), cfg.density);
    if (k % 2 == 0) {
      add(with_extreme(base, false));
    } else {
      const int x = static_cast<int>(pick(rng, base.size()));
      add(with_pendant(base, x, k % 4 == 1));
    }
  }
  return out;
}

bool isomorphic(const FinSpace& a, const FinSpace& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  const auto sa = point_signature(a);
  const auto sb = point_signature(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z)
        ok = a.leq(z, x) == b.leq(image[z], y) && a.leq(x, z) == b.leq(y, image[z]);
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    image[x] = -1;
    return false;
  };
  return rec(rec, 0);
}

bool is_normal(const FinSpace& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y)
      if (!s.down(x).intersects(s.down(y)) && s.up(x).intersects(s.up(y))) return false;
  return true;
}

bool is_normal_exhaustive(const FinSpace& s, int max_points) {
  if (s.size() > max_points)
    throw SizeCapError("normality search limited to " + std::to_string(max_points) + " points");
  const auto closed = s.closed_sets();
  for (const PointSet c : closed) {
    if (c.empty()) continue;
    for (const PointSet d : closed) {
      if (d.empty() || c.intersects(d)) continue;
      // The smallest open supersets are the hulls; any separation shrinks to them.
      if (s.open_hull(c).intersects(s.open_hull(d))) return false;
    }
  }
  return true;
}

json SuiteReport::to_json() const {
  return {{"name", name},
          {"status", passed() ? "pass" : "fail"},
          {"instances", instances},
          {"exercised", exercised},
          {"skipped", skipped},
          {"checks", checks},
          {"violations", violations},
          {"min_exercised", min_exercised},
          {"certificates", certificates},
          {"info", info}};
}

int threads_from_env() {
  if (const char* v = std::getenv("LSCAT_THREADS")) {
    const int n = std::atoi(v);
    if (n > 0) return n;
  }
  return 1;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------

SuiteReport run_homotopy_oracle_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  // Instances: pairs of maps between small spaces (self-maps and maps into
  // the next space of the list), drawn from the full enumeration.
  const auto small = share_all(spaces, 5);
  struct Instance {
    ContMap f;
    ContMap g;
  };
  std::vector<Instance> instances;
  std::mt19937_64 rng(cfg.seed ^ 0x0bad5eedULL);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (int variant = 0; variant < 2; ++variant) {
      const SpacePtr& dom = small[i];
      const SpacePtr& cod = variant == 0 ? small[i] : small[(i + 1) % small.size()];
      std::vector<ContMap> maps;
      try {
        maps = all_continuous_maps(dom, cod, cfg.oracle_cap);
      } catch (const SizeCapError&) {
        continue;
      }
      for (int k = 0; k < 2; ++k)
        instances.push_back({maps[pick(rng, maps.size())], maps[pick(rng, maps.size())]});
      // One pair from the same class, so positive answers are exercised.
      const ContMap& f = maps[pick(rng, maps.size())];
      const auto cls = oracle_homotopy_class(f, cfg.oracle_cap);
      instances.push_back({f, cls[pick(rng, cls.size())]});
    }
  }
  auto describe = [&](std::size_t i) {
    return json{{"dom", space_json(*instances[i].f.dom())},
                {"cod", space_json(*instances[i].f.cod())},
                {"f", map_json(instances[i].f)},
                {"g", map_json(instances[i].g)}};
  };
  return collect("homotopy_oracle", instances.size(), cfg, 500, [&](std::size_t i) {
    Partial p;
    const auto& [f, g] = instances[i];
    const Verdict v = are_homotopic(f, g, cfg.limits);
    if (v == Verdict::undecided) {
      p.skipped = true;
      p.counters["undecided"] = 1;
      return p;
    }
    p.exercised = true;
    p.checks = 1;
    const bool truth = homotopy_oracle(f, g, cfg.oracle_cap);
    p.counters[truth ? "homotopic" : "not_homotopic"] = 1;
    if ((v == Verdict::yes) != truth)
      add_certificate(p, {{"bfs", to_string(v)}, {"oracle", truth}});
    return p;
  }, describe);
}

SuiteReport run_axiom_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces);
  return collect("axioms", shared.size(), cfg, 200, [&](std::size_t i) {
    Partial p;
    p.exercised = true;
    const auto a = analyse(shared[i], cfg);
    AxiomCheckConfig acfg;
    acfg.map_cap = cfg.map_cap;
    acfg.seed = cfg.seed + i;
    const std::pair<CategoryFn, AxiomSet> categories[] = {
        {category_nu_H(a), kAllAxioms},
        {category_nu_LS(a), kMonotone | kSubadditive | kHomotopy | kSingleton},
        {category_nu_c(a), kMonotone | kSubadditive | kOpenExtension | kHomotopy},
        {category_nu_CL(a), kMonotone | kSubadditive | kOpenExtension | kHomotopy},
    };
    for (const auto& [nu, expected] : categories) {
      const CheckReport r = check_axioms(nu, acfg);
      for (int k = 0; k < 5; ++k) {
        const CheckResult& c = r.checks[k];
        if (expected & (1U << k)) {
          absorb(p, c, nu.provenance() + ": ");
        } else {
          p.counters[nu.provenance() + " " + c.name + " holds"] += c.passed() ? 1 : 0;
        }
        if (c.name == "axiom (iv)" && (expected & kHomotopy)) {
          p.counters[std::string("axiom (iv) ") + (c.mode == "exhaustive" ? "complete" : "sampled")] += 1;
          if (c.mode != "exhaustive" && shared[i]->size() <= 6) p.counters["axiom (iv) sampled at <= 6 points"] += 1;
        }
      }
    }
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_chain_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces);
  return collect("chain nu_CL <= nu_c <= nu_H", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    p.exercised = true;
    const auto a = analyse(shared[i], cfg);
    const FinSpace& s = *shared[i];
    bool sampled = false;
    for (const PointSet x : checked_subsets(s, 6, 2000, cfg.seed + i, &sampled)) {
      ++p.checks;
      const CategoryValue cl = a->nu_CL(x), c = a->nu_c(x).value, h = a->nu_H(x).value;
      if (cl > c || c > h)
        add_certificate(p, {{"A", subset_json(s, x)}, {"nu_CL", value_json(cl)},
                            {"nu_c", value_json(c)}, {"nu_H", value_json(h)}});
      if (cl < h) ++p.counters["strict nu_CL < nu_H"];
      if (c < h) ++p.counters["strict nu_c < nu_H"];
    }
    p.counters[sampled ? "sampled spaces" : "exhaustive spaces"] = 1;
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_lemma31_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces, 10);
  return collect("lemma31 domination", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    const SpacePtr& x = shared[i];
    const auto beats = find_beat_points(x);
    if (beats.empty()) {
      p.skipped = true;
      return p;
    }
    p.exercised = true;
    const auto ax = analyse(x, cfg);
    for (const BeatPoint& b : beats) {
      const auto ar = analyse(b.reduced, cfg);
      const ContMap id_x = ContMap::identity(x);
      const ContMap id_r = ContMap::identity(b.reduced);
      // The retraction is a homotopy equivalence; confirm both compositions.
      ++p.checks;
      if (are_homotopic(b.inclusion.after(b.retraction), id_x, cfg.limits) != Verdict::yes)
        add_certificate(p, {{"beat_point", x->label(b.point)}, {"reason", "i∘r not homotopic to id"}});
      if (b.retraction.after(b.inclusion) != id_r)
        add_certificate(p, {{"beat_point", x->label(b.point)}, {"reason", "r∘i != id"}});
      // X dominated by X' (f = r): ν_H(r⁻¹A; X) ≤ ν_H(A; X').
      for_each_subset(b.reduced->all(), [&](PointSet a) {
        ++p.checks;
        const PointSet pre = b.retraction.preimage(a);
        if (ax->nu_H(pre).value > ar->nu_H(a).value)
          add_certificate(p, {{"beat_point", x->label(b.point)}, {"f", "retraction"},
                              {"A", subset_json(*b.reduced, a)}, {"preimage", subset_json(*x, pre)}});
      });
      // X' dominated by X (f = i): ν_H(i⁻¹A; X') ≤ ν_H(A; X).
      for_each_subset(x->all(), [&](PointSet a) {
        ++p.checks;
        const PointSet pre = b.inclusion.preimage(a);
        if (ar->nu_H(pre).value > ax->nu_H(a).value)
          add_certificate(p, {{"beat_point", x->label(b.point)}, {"f", "inclusion"},
                              {"A", subset_json(*x, a)}, {"preimage", subset_json(*b.reduced, pre)}});
      });
      ++p.checks;
      if (ax->nu_H(x->all()).value != ar->nu_H(b.reduced->all()).value)
        add_certificate(p, {{"beat_point", x->label(b.point)},
                            {"nu_H_X", value_json(ax->nu_H(x->all()).value)},
                            {"nu_H_reduced", value_json(ar->nu_H(b.reduced->all()).value)}});
    }
    p.counters["beat points"] = beats.size();
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_tcollection_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces);
  return collect("T-collections", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    const SpacePtr& s = shared[i];
    const auto maps = enumerate_self_maps_homotopic_to_id(s, cfg.map_cap);
    if (maps.truncated) {
      p.skipped = true;
      p.counters["map enumeration truncated"] = 1;
      return p;
    }
    p.exercised = true;
    auto generated = [&](PointSet u) {
      std::set<PointSet> family;
      for (const auto& f : maps.maps) family.insert(f.preimage(u));
      return std::vector<PointSet>(family.begin(), family.end());
    };
    auto verify = [&](const TCollection& t, const std::string& what) {
      const auto rep = verify_t_collection(t, cfg.map_cap);
      p.checks += rep.members_checked * std::max<std::size_t>(rep.maps_checked, 1);
      for (const auto& v : rep.violations)
        add_certificate(p, {{"collection", what}, {"U", subset_json(*s, v.member)},
                            {"f", map_json(v.map)}, {"preimage", subset_json(*s, v.preimage)}});
    };
    const auto full = generated(s->all());
    ++p.checks;
    if (full != std::vector<PointSet>{s->all()})
      add_certificate(p, {{"collection", "generated by the full space"}, {"reason", "not {M}"}});

    std::mt19937_64 rng(cfg.seed + 31 * i);
    const int x = static_cast<int>(pick(rng, s->size()));
    const int y = static_cast<int>(pick(rng, s->size()));
    const auto t1 = generated(s->up(x));
    const auto t2 = generated(s->up(y));
    verify(TCollection::explicit_family(s, t1, "generated(U_x)"), "generated(U_x)");
    verify(TCollection::explicit_family(s, t2, "generated(U_y)"), "generated(U_y)");
    std::vector<PointSet> both, either;
    std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(both));
    std::set_union(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(either));
    verify(TCollection::explicit_family(s, both, "intersection"), "intersection");
    verify(TCollection::explicit_family(s, either, "union"), "union");
    const auto a = analyse(s, cfg);
    verify(collection_T_H(a), "T_H");
    verify(collection_T_c(a), "T_c");
    verify(TCollection::all_opens(s), "all opens");
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_lemma41_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces);
  return collect("lemma41", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    p.exercised = true;
    const auto a = analyse(shared[i], cfg);
    for (const CategoryFn& nu : {category_nu_H(a), category_nu_LS(a), category_nu_c(a), category_nu_CL(a)})
      for (int n : {1, 2}) {
        const CheckReport r = check_lemma41(nu, n);
        absorb(p, r);
        for (const auto& c : r.checks)
          p.counters["strict (n=" + std::to_string(n) + ")"] += c.info.value("strict", std::uint64_t{0});
      }
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_prop42_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces);
  return collect("prop42", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    p.exercised = true;
    const auto a = analyse(shared[i], cfg);
    for (const CategoryFn& nu : {category_nu_H(a), category_nu_LS(a), category_nu_c(a), category_nu_CL(a)})
      absorb(p, check_prop42(nu));
    for (const TCollection& t : {collection_T_H(a), collection_T_c(a), TCollection::all_opens(shared[i])})
      absorb(p, check_prop42(t));
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_cor43_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces);
  return collect("cor43", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    p.exercised = true;
    const auto a = analyse(shared[i], cfg);
    absorb(p, check_cor43(category_nu_H(a), collection_T_H(a)));
    absorb(p, check_cor43(category_nu_c(a), collection_T_c(a)));
    absorb(p, check_cor43(category_nu_CL(a), std::nullopt));
    absorb(p, check_cor43(collection_T_H(a), category_nu_H(a)));
    absorb(p, check_cor43(collection_T_c(a), category_nu_c(a)));
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_prop33_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces, 12);
  return collect("prop33", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    const CheckReport r = check_prop33(analyse(shared[i], cfg));
    absorb(p, r);
    for (const auto& c : r.checks) {
      if (c.status != "skipped") ++p.counters[c.name + " exercised"];
    }
    const CheckResult* eq = r.find("nu_LS = bar(nu_H)");
    p.exercised = eq && eq->status != "skipped";
    p.skipped = !p.exercised;
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_prop51_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg,
                             std::uint64_t trials) {
  struct Subject {
    AnalysisPtr analysis;
    std::vector<PointSet> opens;
    std::vector<int> degrees;  // positive degrees, each repeated betti times
  };
  auto subjects_of = [&](const std::vector<SpacePtr>& pool) {
    std::vector<Subject> out;
    for (const auto& s : pool) {
      Subject sub{analyse(s, cfg), s->open_sets(), {}};
      const CohomologyRing& ring = sub.analysis->cohomology();
      for (int d = 1; d <= ring.top_degree(); ++d)
        for (int k = 0; k < ring.betti(d); ++k) sub.degrees.push_back(d);
      if (!sub.degrees.empty()) out.push_back(std::move(sub));
    }
    return out;
  };
  // Even trials use builtins with nonzero products, odd trials the given spaces.
  std::vector<SpacePtr> builtins;
  for (const char* name : {"torus16", "circle4", "torus16", "wedge2circles", "torus16", "sphere(2)"})
    builtins.push_back(share(*builtin_space(name)));
  const std::vector<Subject> fixed = subjects_of(builtins);
  std::vector<Subject> random = subjects_of(share_all(spaces, 12));
  if (random.empty()) random = fixed;
  auto subject_of = [&](std::size_t t) -> const Subject& {
    return t % 2 == 0 ? fixed[(t / 2) % fixed.size()] : random[(t / 2) % random.size()];
  };
  auto describe = [&](std::size_t t) { return space_json(*subject_of(t).analysis->space()); };
  return collect("prop51", trials, cfg, 100, [&](std::size_t t) {
    Partial p;
    const Subject& sub = subject_of(t);
    const CohomologyRing& ring = sub.analysis->cohomology();
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + t);
    auto random_class = [&] {
      const int d = sub.degrees[pick(rng, sub.degrees.size())];
      BitVec coords(ring.betti(d));
      while (coords.none())
        for (int k = 0; k < ring.betti(d); ++k)
          if (rng() & 1U) coords.set(k);
      CohomClass c = ring.from_coordinates(d, coords);
      // Perturb the representative by a random coboundary.
      if (d > 0) {
        BitVec b = ring.zero_cochain(d - 1);
        for (std::size_t k = 0; k < ring.complex().count(d - 1); ++k)
          if (rng() & 1U) b.set(k);
        c.cocycle ^= ring.coboundary(d - 1, b);
      }
      return c;
    };
    // A random open set on which c vanishes; half the time a maximal one.
    auto vanishing_open = [&](const CohomClass& c) {
      std::vector<PointSet> ok;
      for (const PointSet u : sub.opens)
        if (ring.vanishes_on(c, u.bits())) ok.push_back(u);
      if (rng() & 1U) {
        std::vector<PointSet> maximal;
        for (const PointSet u : ok)
          if (std::none_of(ok.begin(), ok.end(), [&](PointSet w) { return w != u && u.subset_of(w); }))
            maximal.push_back(u);
        return maximal[pick(rng, maximal.size())];
      }
      return ok[pick(rng, ok.size())];  // ∅ always qualifies
    };
    const CohomClass a = random_class();
    const CohomClass b = random_class();
    const PointSet u = vanishing_open(a);
    const PointSet v = vanishing_open(b);
    const Prop51Outcome o = check_prop51(ring, u.bits(), v.bits(), a, b);
    p.checks = 1;
    if (o == Prop51Outcome::precondition_unmet) {
      p.skipped = true;
      return p;
    }
    p.exercised = true;
    if (!u.empty() && !v.empty()) ++p.counters["both sets nonempty"];
    if (a.degree + b.degree <= ring.top_degree() && !ring.is_zero_class(ring.cup(a, b)))
      ++p.counters["nonzero product"];
    if (o == Prop51Outcome::violated) {
      const FinSpace& s = *sub.analysis->space();
      add_certificate(p, {{"U", subset_json(s, u)}, {"V", subset_json(s, v)},
                          {"alpha_degree", a.degree}, {"beta_degree", b.degree}});
    }
    return p;
  }, describe);
}

SuiteReport run_lemma57_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces, 9);
  const SpacePtr circle = share(*builtin_space("circle4"));
  const CohomologyRing circle_ring = space_cohomology(*circle);
  return collect("lemma57", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    const SpacePtr& x = shared[i];
    const auto ax = analyse(x, cfg);
    const CohomologyRing& ring = ax->cohomology();
    std::mt19937_64 rng(cfg.seed + 977 * i);
    auto run = [&](const ContMap& f, const CohomologyRing& dom_ring, const CohomologyRing& cod_ring,
                   const char* kind) {
      const Lemma57Report r = check_lemma57(f, dom_ring, cod_ring);
      if (!r.surjective) {
        ++p.counters[std::string(kind) + " not onto"];
        return;
      }
      p.exercised = true;
      ++p.counters[std::string(kind) + " onto"];
      p.checks += r.checked;
      for (const PointSet a : r.violations)
        add_certificate(p, {{"kind", kind}, {"f", map_json(f)}, {"A", subset_json(*f.dom(), a)}});
    };
    run(ContMap::identity(x), ring, ring, "identity");
    const auto beats = find_beat_points(x);
    if (!beats.empty()) {
      const BeatPoint& b = beats[pick(rng, beats.size())];
      const CohomologyRing reduced = space_cohomology(*b.reduced);
      run(b.retraction, ring, reduced, "retraction");
      run(b.inclusion, reduced, ring, "inclusion");
    }
    const auto self = enumerate_self_maps_homotopic_to_id(x, cfg.map_cap);
    for (int k = 0; k < 2 && self.maps.size() > 1; ++k)
      run(self.maps[1 + pick(rng, self.maps.size() - 1)], ring, ring, "map homotopic to id");
    try {
      const auto to_circle = all_continuous_maps(x, circle, cfg.oracle_cap);
      std::vector<const ContMap*> onto;
      for (const auto& f : to_circle)
        if (f.image_of(x->all()) == circle->all()) onto.push_back(&f);
      if (!onto.empty()) run(*onto[pick(rng, onto.size())], ring, circle_ring, "onto circle4");
    } catch (const SizeCapError&) {
      ++p.counters["circle maps capped"];
    }
    p.skipped = !p.exercised;
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_tc_identity_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces, 8);
  return collect("T_{nu_CL} = T_c + {empty}", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    p.exercised = true;
    const FinSpace& s = *shared[i];
    const auto a = analyse(shared[i], cfg);
    std::vector<PointSet> t_cl;
    for (const PointSet u : s.open_sets()) {
      ++p.checks;
      const bool in_t_cl = a->nu_CL(u) <= CategoryValue(1);
      const bool in_t_c = u.empty() || a->cohomologically_trivial(u);
      if (in_t_cl) t_cl.push_back(u);
      if (in_t_cl != in_t_c)
        add_certificate(p, {{"U", subset_json(s, u)}, {"nu_CL", value_json(a->nu_CL(u))},
                            {"trivial", in_t_c}});
    }
    std::vector<PointSet> candidates;
    for (const PointSet u : t_cl)
      if (!u.empty()) candidates.push_back(u);
    for_each_subset(s.all(), [&](PointSet x) {
      ++p.checks;
      const CategoryValue lhs = a->nu_c(x).value;
      const CategoryValue rhs = min_cover(x, candidates).value;
      if (lhs != rhs)
        add_certificate(p, {{"A", subset_json(s, x)}, {"nu_c", value_json(lhs)},
                            {"nu_T_nu_CL", value_json(rhs)}});
    });
    return p;
  }, describe_spaces(shared));
}

SuiteReport run_nu_cl_fast_path_suite(const std::vector<FinSpace>& spaces, const GenConfig& cfg) {
  const auto shared = share_all(spaces, 8);
  return collect("nu_CL fast path", shared.size(), cfg, 20, [&](std::size_t i) {
    Partial p;
    p.exercised = true;
    const FinSpace& s = *shared[i];
    const auto a = analyse(shared[i], cfg);
    for_each_subset(s.all(), [&](PointSet x) {
      ++p.checks;
      if (a->nu_CL(x) != a->nu_CL_definitional(x))
        add_certificate(p, {{"A", subset_json(s, x)}, {"hull", value_json(a->nu_CL(x))},
                            {"definitional", value_json(a->nu_CL_definitional(x))}});
    });
    return p;
  }, describe_spaces(shared));
}

json run_full_report(const GenConfig& cfg) {
  const auto generated = gen_posets(cfg);
  const auto targeted = targeted_spaces(cfg);
  std::vector<FinSpace> all = generated;
  all.insert(all.end(), targeted.begin(), targeted.end());

  GenConfig small = cfg;
  small.min_size = 2;
  small.max_size = std::min(cfg.max_size, 5);
  small.count = std::max(cfg.count, 200);
  auto small_spaces = gen_posets(small);
  for (const auto& s : targeted)
    if (s.size() <= 5) small_spaces.push_back(s);

  std::vector<SuiteReport> suites;
  suites.push_back(run_homotopy_oracle_suite(small_spaces, cfg));
  suites.push_back(run_axiom_suite(generated, cfg));
  suites.push_back(run_chain_suite(all, cfg));
  suites.push_back(run_lemma31_suite(all, cfg));
  suites.push_back(run_tcollection_suite(all, cfg));
  suites.push_back(run_lemma41_suite(all, cfg));
  suites.push_back(run_prop42_suite(all, cfg));
  suites.push_back(run_cor43_suite(all, cfg));
  suites.push_back(run_prop33_suite(all, cfg));
  suites.push_back(run_prop51_suite(all, cfg, 200));
  suites.push_back(run_lemma57_suite(all, cfg));
  suites.push_back(run_tc_identity_suite(all, cfg));
  suites.push_back(run_nu_cl_fast_path_suite(all, cfg));

  json out;
  out["spaces"] = {{"generated", generated.size()}, {"targeted", targeted.size()},
                   {"oracle_pool", small_spaces.size()}};
  std::size_t non_normal = 0;
  for (const auto& s : generated) non_normal += is_normal(s) ? 0 : 1;
  out["spaces"]["generated_non_normal"] = non_normal;
  bool passed = true;
  out["suites"] = json::array();
  for (const auto& r : suites) {
    passed = passed && r.passed();
    out["suites"].push_back(r.to_json());
  }
  out["passed"] = passed;
  return out;
}

}  // namespace lscat
