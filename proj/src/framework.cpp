#include "lscat/framework.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lscat/error.hpp"
#include "lscat/harness.hpp"

namespace lscat {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxCertificates = 5;

json value_json(CategoryValue v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

PointSet parse_labels(const FinSpace& s, const json& labels) {
  PointSet out;
  for (const auto& l : labels) {
    auto idx = s.index_of(l.get<std::string>());
    if (!idx) throw InputError("certificate names unknown point " + l.dump());
    out = out.with(*idx);
  }
  return out;
}

// Open sets with ν(U) ≤ bound, ∅ included.
std::vector<PointSet> opens_with_value_at_most(const FinSpace& s,
                                               const std::function<CategoryValue(PointSet)>& nu,
                                               std::uint32_t bound) {
  std::vector<PointSet> out;
  for (const PointSet u : s.open_sets())
    if (nu(u) <= CategoryValue(bound)) out.push_back(u);
  return out;
}

std::vector<PointSet> nonempty(std::vector<PointSet> sets) {
  std::erase_if(sets, [](PointSet s) { return s.empty(); });
  return sets;
}

json set_list_json(const FinSpace& s, const std::vector<PointSet>& sets) {
  json out = json::array();
  for (const PointSet u : sets) out.push_back(subset_json(s, u));
  return out;
}

}  // namespace

const char* axiom_name(int index) {
  static const char* const kNames[] = {"i", "ii", "iii", "iv", "v"};
  return index >= 0 && index < 5 ? kNames[index] : "?";
}

// ---------------------------------------------------------------------------

CategoryFn::CategoryFn(SpacePtr space, Eval eval, AxiomSet claims, std::string provenance)
    : space_(std::move(space)),
      eval_(std::move(eval)),
      claims_(claims),
      provenance_(std::move(provenance)),
      memo_(std::make_shared<Memo>()) {}

CategoryValue CategoryFn::operator()(PointSet a) const {
  if (!space_->contains(a)) throw InputError("subset outside the space of " + provenance_);
  if (a.empty()) return CategoryValue(0);
  {
    std::lock_guard lock(memo_->mu);
    if (auto it = memo_->values.find(a); it != memo_->values.end()) return it->second;
  }
  const CategoryValue v = eval_(a);
  std::lock_guard lock(memo_->mu);
  memo_->values.emplace(a, v);
  return v;
}

void CategoryFn::clear_cache() const {
  std::lock_guard lock(memo_->mu);
  memo_->values.clear();
}

PrecategoryFn::PrecategoryFn(SpacePtr space, CategoryFn::Eval eval, bool monotone,
                             std::string provenance)
    : space_(space),
      inner_(space, std::move(eval), kSubadditive | kHomotopy, provenance),
      monotone_(monotone),
      provenance_(std::move(provenance)) {}

CategoryValue PrecategoryFn::operator()(PointSet u) const {
  if (!space_->is_open(u))
    throw InputError(provenance_ + " is defined on open sets only; got " + space_->format(u));
  return inner_(u);
}

CategoryFn tilde(const PrecategoryFn& nu0) {
  if (!nu0.monotone()) return tilde_by_enumeration(nu0);
  const SpacePtr s = nu0.space();
  return CategoryFn(
      s, [nu0, s](PointSet a) { return nu0(s->open_hull(a)); },
      kMonotone | kSubadditive | kOpenExtension | kHomotopy, "tilde(" + nu0.provenance() + ")");
}

CategoryFn tilde_by_enumeration(const PrecategoryFn& nu0) {
  const SpacePtr s = nu0.space();
  auto opens = std::make_shared<const std::vector<PointSet>>(s->open_sets());
  return CategoryFn(
      s,
      [nu0, opens](PointSet a) {
        CategoryValue best = CategoryValue::infinity();
        for (const PointSet u : *opens)
          if (a.subset_of(u)) best = std::min(best, nu0(u));
        return best;
      },
      kMonotone | kSubadditive | kOpenExtension | kHomotopy,
      "tilde_enum(" + nu0.provenance() + ")");
}

CategoryFn bar(const CategoryFn& nu) {
  const SpacePtr s = nu.space();
  return CategoryFn(
      s, [nu, s](PointSet a) { return nu(s->closure(a)); }, nu.claims(),
      "bar(" + nu.provenance() + ")");
}

CategoryFn nu_from_T(const TCollection& t) {
  auto candidates = std::make_shared<const std::vector<PointSet>>(t.cover_candidates());
  return CategoryFn(
      t.space(), [candidates](PointSet a) { return min_cover(a, *candidates).value; },
      kMonotone | kSubadditive | kOpenExtension | kHomotopy, "nu_T(" + t.name() + ")");
}

TCollection T_from_nu(const CategoryFn& nu, int n) {
  return t_of_nu(nu.space(), nu, n, (nu.claims() & kMonotone) != 0, nu.provenance());
}

CategoryFn category_nu_H(AnalysisPtr a) {
  const SpacePtr s = a->space();
  return CategoryFn(s, [a](PointSet x) { return a->nu_H(x).value; }, kAllAxioms, "nu_H");
}

CategoryFn category_nu_LS(AnalysisPtr a) {
  const SpacePtr s = a->space();
  return CategoryFn(
      s, [a](PointSet x) { return a->nu_LS(x).value; },
      kMonotone | kSubadditive | kHomotopy | kSingleton, "nu_LS");
}

CategoryFn category_nu_c(AnalysisPtr a) {
  const SpacePtr s = a->space();
  return CategoryFn(s, [a](PointSet x) { return a->nu_c(x).value; }, kAllAxioms, "nu_c");
}

PrecategoryFn precategory_cuplength(AnalysisPtr a) {
  const SpacePtr s = a->space();
  return PrecategoryFn(
      s, [a](PointSet u) { return CategoryValue(static_cast<std::uint32_t>(a->cuplength(u))); },
      true, "cuplength");
}

CategoryFn category_nu_CL(AnalysisPtr a) { return tilde(precategory_cuplength(std::move(a))); }

TCollection collection_T_c(AnalysisPtr a) {
  const SpacePtr s = a->space();
  return TCollection::predicate(
      s, [a](PointSet u) { return a->cohomologically_trivial(u); }, true, "T_c");
}

TCollection collection_T_H(AnalysisPtr a) {
  const SpacePtr s = a->space();
  return TCollection::predicate(s, [a](PointSet u) { return a->contractible(u); }, true, "T_H");
}

// ---------------------------------------------------------------------------

void CheckResult::fail(json certificate) {
  status = "fail";
  ++violation_count;
  if (certificates.size() < kMaxCertificates) certificates.push_back(std::move(certificate));
}

json CheckResult::to_json() const {
  json j{{"name", name},       {"status", status},
         {"mode", mode},       {"checked", checked},
         {"skipped", skipped}, {"violations", violation_count}};
  if (!certificates.empty()) j["certificates"] = certificates;
  if (!info.empty()) j["info"] = info;
  return j;
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json CheckReport::to_json() const {
  json j{{"subject", subject}, {"passed", passed()}, {"checks", json::array()}};
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

json subset_json(const FinSpace& s, PointSet a) { return s.label_list(a); }

json map_json(const ContMap& f) {
  json out = json::array();
  for (auto v : f.image()) out.push_back(f.cod()->label(v));
  return out;
}

json space_json(const FinSpace& s) {
  json order = json::array();
  for (auto [x, y] : s.cover_relations()) order.push_back({s.label(x), s.label(y)});
  return {{"points", s.labels()}, {"order", order}};
}

std::vector<PointSet> checked_subsets(const FinSpace& s, int exhaustive_points,
                                      std::size_t samples, std::uint64_t seed, bool* sampled) {
  std::vector<PointSet> out;
  if (s.size() <= exhaustive_points) {
    if (sampled) *sampled = false;
    for_each_subset(s.all(), [&](PointSet a) { out.push_back(a); });
    return out;
  }
  if (sampled) *sampled = true;
  std::set<PointSet> picked{PointSet{}, s.all()};
  for (int x = 0; x < s.size(); ++x) picked.insert(PointSet::single(x));
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; picked.size() < samples && attempt < 8 * samples; ++attempt)
    picked.insert(PointSet(rng()) & s.all());
  return {picked.begin(), picked.end()};
}

// ---------------------------------------------------------------------------

CheckReport check_axioms(const CategoryFn& nu, const AxiomCheckConfig& cfg) {
  const FinSpace& s = *nu.space();
  CheckReport report{nu.provenance(), {}};
  bool sampled = false;
  const auto subsets = checked_subsets(s, cfg.exhaustive_points, cfg.samples, cfg.seed, &sampled);
  const char* mode = sampled ? "sampled" : "exhaustive";
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  auto random_subset = [&] { return PointSet(rng()) & s.all(); };

  CheckResult mono{"axiom (i)"};
  mono.mode = mode;
  auto check_mono = [&](PointSet a, PointSet b) {
    ++mono.checked;
    if (nu(a) > nu(b))
      mono.fail({{"axiom", "i"}, {"A", subset_json(s, a)}, {"B", subset_json(s, b)},
                 {"nu_A", value_json(nu(a))}, {"nu_B", value_json(nu(b))}});
  };
  if (!sampled) {
    for (const PointSet b : subsets) for_each_subset(b, [&](PointSet a) { check_mono(a, b); });
  } else {
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const PointSet b = random_subset();
      check_mono(b & random_subset(), b);
    }
  }
  report.checks.push_back(std::move(mono));

  CheckResult sub{"axiom (ii)"};
  sub.mode = mode;
  auto check_sub = [&](PointSet a, PointSet b) {
    ++sub.checked;
    if (nu(a | b) > nu(a) + nu(b))
      sub.fail({{"axiom", "ii"}, {"A", subset_json(s, a)}, {"B", subset_json(s, b)},
                {"nu_A", value_json(nu(a))}, {"nu_B", value_json(nu(b))},
                {"nu_union", value_json(nu(a | b))}});
  };
  if (!sampled) {
    for (const PointSet a : subsets)
      for (const PointSet b : subsets)
        if (a <= b) check_sub(a, b);
  } else {
    for (std::size_t k = 0; k < cfg.samples; ++k) check_sub(random_subset(), random_subset());
  }
  report.checks.push_back(std::move(sub));

  CheckResult ext{"axiom (iii)"};
  ext.mode = mode;
  const auto opens = s.open_sets();
  for (const PointSet a : subsets) {
    ++ext.checked;
    const CategoryValue va = nu(a);
    const bool ok = std::any_of(opens.begin(), opens.end(),
                                [&](PointSet u) { return a.subset_of(u) && nu(u) == va; });
    if (!ok) ext.fail({{"axiom", "iii"}, {"A", subset_json(s, a)}, {"nu_A", value_json(va)}});
  }
  report.checks.push_back(std::move(ext));

  CheckResult hom{"axiom (iv)"};
  const auto maps = enumerate_self_maps_homotopic_to_id(nu.space(), cfg.map_cap);
  hom.mode = sampled || maps.truncated ? "sampled" : "exhaustive";
  hom.info["maps"] = maps.maps.size();
  hom.info["maps_truncated"] = maps.truncated;
  for (const auto& f : maps.maps) {
    if (f == ContMap::identity(nu.space())) continue;
    for (const PointSet a : subsets) {
      ++hom.checked;
      const PointSet fa = f.image_of(a);
      if (nu(a) > nu(fa))
        hom.fail({{"axiom", "iv"}, {"A", subset_json(s, a)}, {"f", map_json(f)},
                  {"nu_A", value_json(nu(a))}, {"nu_fA", value_json(nu(fa))}});
    }
  }
  report.checks.push_back(std::move(hom));

  CheckResult one{"axiom (v)"};
  for (int x = 0; x < s.size(); ++x) {
    ++one.checked;
    const CategoryValue v = nu(PointSet::single(x));
    if (v != CategoryValue(1)) one.fail({{"axiom", "v"}, {"point", s.label(x)}, {"nu", value_json(v)}});
  }
  report.checks.push_back(std::move(one));
  return report;
}

bool recheck_certificate(const CategoryFn& nu, const json& cert) {
  const FinSpace& s = *nu.space();
  const std::string axiom = cert.at("axiom").get<std::string>();
  if (axiom == "i") return nu(parse_labels(s, cert.at("A"))) > nu(parse_labels(s, cert.at("B")));
  if (axiom == "ii") {
    const PointSet a = parse_labels(s, cert.at("A"));
    const PointSet b = parse_labels(s, cert.at("B"));
    return nu(a | b) > nu(a) + nu(b);
  }
  if (axiom == "iii") {
    const PointSet a = parse_labels(s, cert.at("A"));
    for (const PointSet u : s.open_sets())
      if (a.subset_of(u) && nu(u) == nu(a)) return false;
    return true;
  }
  if (axiom == "iv") {
    const PointSet a = parse_labels(s, cert.at("A"));
    std::vector<std::uint8_t> img;
    for (const auto& l : cert.at("f")) img.push_back(static_cast<std::uint8_t>(*s.index_of(l.get<std::string>())));
    const ContMap f(nu.space(), nu.space(), img);
    return nu(a) > nu(f.image_of(a));
  }
  if (axiom == "v") {
    const auto x = s.index_of(cert.at("point").get<std::string>());
    return x && nu(PointSet::single(*x)) != CategoryValue(1);
  }
  throw InputError("unknown certificate axiom '" + axiom + "'", "axiom");
}

// ---------------------------------------------------------------------------

CheckReport check_lemma41(const CategoryFn& nu, int n) {
  const FinSpace& s = *nu.space();
  CheckReport report{"lemma41(" + nu.provenance() + ",n=" + std::to_string(n) + ")", {}};
  const TCollection t = T_from_nu(nu, n);
  const auto candidates = t.cover_candidates();
  bool sampled = false;
  const auto subsets = checked_subsets(s, 12, 4096, 7, &sampled);
  CheckResult c{"nu <= n * nu_{T_{nu,n}}"};
  c.mode = sampled ? "sampled" : "exhaustive";
  std::uint64_t strict = 0;
  for (const PointSet a : subsets) {
    ++c.checked;
    const CategoryValue lhs = nu(a);
    const CategoryValue rhs = min_cover(a, candidates).value * static_cast<std::uint32_t>(n);
    if (lhs > rhs)
      c.fail({{"A", subset_json(s, a)}, {"nu_A", value_json(lhs)}, {"bound", value_json(rhs)}});
    else if (lhs < rhs)
      ++strict;
  }
  c.info["strict"] = strict;
  report.checks.push_back(std::move(c));
  return report;
}

CheckReport check_prop42(const CategoryFn& nu) {
  const FinSpace& s = *nu.space();
  CheckReport report{"prop42(" + nu.provenance() + ")", {}};
  const auto t_nu = opens_with_value_at_most(s, nu, 1);
  const auto candidates = nonempty(t_nu);
  auto nu_t = [&](PointSet a) { return min_cover(a, candidates).value; };
  const auto t_back = opens_with_value_at_most(s, nu_t, 1);

  CheckResult eq{"T_{nu_{T_nu}} = T_nu"};
  eq.checked = s.open_sets().size();
  eq.info["size"] = t_nu.size();
  if (t_nu != t_back) {
    std::vector<PointSet> diff;
    std::set_symmetric_difference(t_nu.begin(), t_nu.end(), t_back.begin(), t_back.end(),
                                  std::back_inserter(diff));
    eq.fail({{"symmetric_difference", set_list_json(s, diff)}});
  }
  report.checks.push_back(std::move(eq));

  CheckResult incl{"T_nu subset T_{nu_{T_nu}}"};
  incl.checked = t_nu.size();
  for (const PointSet u : t_nu)
    if (!std::binary_search(t_back.begin(), t_back.end(), u)) incl.fail({{"U", subset_json(s, u)}});
  report.checks.push_back(std::move(incl));

  CheckResult below{"nu <= nu_{T_nu}"};
  bool sampled = false;
  for (const PointSet a : checked_subsets(s, 12, 4096, 11, &sampled)) {
    ++below.checked;
    if (nu(a) > nu_t(a))
      below.fail({{"A", subset_json(s, a)}, {"nu_A", value_json(nu(a))},
                  {"nu_T_A", value_json(nu_t(a))}});
  }
  below.mode = sampled ? "sampled" : "exhaustive";
  report.checks.push_back(std::move(below));
  return report;
}

CheckReport check_prop42(const TCollection& t) {
  const FinSpace& s = *t.space();
  CheckReport report{"prop42(" + t.name() + ")", {}};
  const auto candidates = t.cover_candidates();
  auto nu_t = [&](PointSet a) { return min_cover(a, candidates).value; };
  const auto t_back = opens_with_value_at_most(s, nu_t, 1);
  const auto back_candidates = nonempty(t_back);

  CheckResult eq{"nu_{T_{nu_T}} = nu_T"};
  bool sampled = false;
  for (const PointSet a : checked_subsets(s, 12, 4096, 13, &sampled)) {
    ++eq.checked;
    const CategoryValue lhs = min_cover(a, back_candidates).value;
    const CategoryValue rhs = nu_t(a);
    if (lhs != rhs)
      eq.fail({{"A", subset_json(s, a)}, {"nu_T_nu_T", value_json(lhs)}, {"nu_T", value_json(rhs)}});
  }
  eq.mode = sampled ? "sampled" : "exhaustive";
  report.checks.push_back(std::move(eq));

  CheckResult incl{"T subset T_{nu_T}"};
  for (const PointSet u : t.members()) {
    ++incl.checked;
    if (!std::binary_search(t_back.begin(), t_back.end(), u)) incl.fail({{"U", subset_json(s, u)}});
  }
  report.checks.push_back(std::move(incl));
  return report;
}

CheckReport check_cor43(const CategoryFn& nu, const std::optional<TCollection>& source) {
  const FinSpace& s = *nu.space();
  CheckReport report{"cor43(" + nu.provenance() + ")", {}};
  const auto candidates = nonempty(opens_with_value_at_most(s, nu, 1));
  bool sampled = false;
  const auto subsets = checked_subsets(s, 12, 4096, 17, &sampled);
  bool fixed_point = true;
  for (const PointSet a : subsets) fixed_point = fixed_point && nu(a) == min_cover(a, candidates).value;

  CheckResult c{"nu = nu_{T_nu} iff nu = nu_T for some T"};
  c.mode = sampled ? "sampled" : "exhaustive";
  c.checked = subsets.size();
  c.info["nu_equals_nu_T_nu"] = fixed_point;
  if (source) {
    const auto src = source->cover_candidates();
    bool from_source = true;
    for (const PointSet a : subsets) from_source = from_source && nu(a) == min_cover(a, src).value;
    c.info["nu_equals_nu_source"] = from_source;
    c.info["source"] = source->name();
    if (from_source && !fixed_point) c.fail({{"reason", "nu = nu_T for the source T but nu != nu_{T_nu}"}});
  }
  report.checks.push_back(std::move(c));
  return report;
}

CheckReport check_cor43(const TCollection& t, const std::optional<CategoryFn>& source) {
  const FinSpace& s = *t.space();
  CheckReport report{"cor43(" + t.name() + ")", {}};
  const auto members = t.members();
  const auto candidates = t.cover_candidates();
  const auto t_back =
      opens_with_value_at_most(s, [&](PointSet a) { return min_cover(a, candidates).value; }, 1);
  const bool fixed_point = members == t_back;

  CheckResult c{"T = T_{nu_T} iff T = T_nu for some nu"};
  c.checked = s.open_sets().size();
  c.info["T_equals_T_nu_T"] = fixed_point;
  if (source) {
    const bool from_source = members == opens_with_value_at_most(s, *source, 1);
    c.info["T_equals_T_source"] = from_source;
    c.info["source"] = source->provenance();
    if (from_source && !fixed_point) c.fail({{"reason", "T = T_nu for the source nu but T != T_{nu_T}"}});
  }
  report.checks.push_back(std::move(c));
  return report;
}

CheckReport check_prop33(const AnalysisPtr& analysis) {
  const FinSpace& s = *analysis->space();
  CheckReport report{"prop33", {}};
  const bool normal = is_normal(s);
  bool sampled = false;
  const auto subsets = checked_subsets(s, 12, 4096, 19, &sampled);
  const char* mode = sampled ? "sampled" : "exhaustive";
  auto ls = [&](PointSet a) { return analysis->nu_LS(a).value; };
  auto h = [&](PointSet a) { return analysis->nu_H(a).value; };

  const auto opens = s.open_sets();
  bool ls_iii = true;
  for (const PointSet a : subsets) {
    const CategoryValue v = ls(a);
    ls_iii = ls_iii && std::any_of(opens.begin(), opens.end(),
                                   [&](PointSet u) { return a.subset_of(u) && ls(u) == v; });
  }

  CheckResult step1{"step1: nu_LS(A) = nu_LS(closure A)"};
  step1.mode = mode;
  for (const PointSet a : subsets) {
    ++step1.checked;
    if (ls(a) != ls(s.closure(a)))
      step1.fail({{"A", subset_json(s, a)}, {"nu_LS_A", value_json(ls(a))},
                  {"nu_LS_closure", value_json(ls(s.closure(a)))}});
  }
  report.checks.push_back(std::move(step1));

  CheckResult step2{"step2: nu_H(A) <= nu_LS(A)"};
  step2.mode = mode;
  if (!ls_iii) {
    step2.status = "skipped";
    step2.skipped = subsets.size();
  } else {
    for (const PointSet a : subsets) {
      ++step2.checked;
      if (h(a) > ls(a))
        step2.fail({{"A", subset_json(s, a)}, {"nu_H", value_json(h(a))}, {"nu_LS", value_json(ls(a))}});
    }
  }
  report.checks.push_back(std::move(step2));

  CheckResult step3{"step3: nu_LS(A) <= nu_H(A) for closed A"};
  step3.mode = mode;
  if (!normal) {
    step3.status = "skipped";
    step3.skipped = subsets.size();
  } else {
    for (const PointSet a : subsets) {
      if (!s.is_closed(a)) continue;
      ++step3.checked;
      if (ls(a) > h(a))
        step3.fail({{"A", subset_json(s, a)}, {"nu_H", value_json(h(a))}, {"nu_LS", value_json(ls(a))}});
    }
  }
  report.checks.push_back(std::move(step3));

  CheckResult eq{"nu_LS = bar(nu_H)"};
  eq.mode = mode;
  if (!(normal && ls_iii)) {
    eq.status = "skipped";
    eq.skipped = subsets.size();
  } else {
    for (const PointSet a : subsets) {
      ++eq.checked;
      if (ls(a) != h(s.closure(a)))
        eq.fail({{"A", subset_json(s, a)}, {"nu_LS", value_json(ls(a))},
                 {"nu_H_closure", value_json(h(s.closure(a)))}});
    }
  }
  eq.info["normal"] = normal;
  eq.info["nu_LS_axiom_iii"] = ls_iii;
  report.checks.push_back(std::move(eq));
  return report;
}

}  // namespace lscat
