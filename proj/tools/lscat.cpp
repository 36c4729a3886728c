#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lscat/analysis.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/complex.hpp"
#include "lscat/error.hpp"
#include "lscat/framework.hpp"
#include "lscat/harness.hpp"
#include "lscat/io.hpp"

using json = nlohmann::json;
using namespace lscat;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kCapError = 3 };

// Everything needed to reproduce a report. Serialized into every report.
struct Manifest {
  std::string command;
  std::string space;
  std::string complex;
  std::string subset = "full";
  std::string invariant = "all";
  std::string nu = "all";
  std::string check;
  std::uint64_t seed = 1;
  std::string sizes = "3..7";
  int count = 200;
  double density = 0.35;
  std::size_t cap_maps = 5000;
  std::size_t cap_states = 200'000;
  std::uint64_t cap_oracle = 1'000'000;
  std::string format = "json";

  json to_json() const {
    return {{"tool", "lscat"},     {"version", kVersion},     {"command", command},
            {"space", space},      {"complex", complex},      {"subset", subset},
            {"invariant", invariant}, {"nu", nu},             {"check", check},
            {"seed", seed},        {"sizes", sizes},          {"count", count},
            {"density", density},  {"cap_maps", cap_maps},    {"cap_states", cap_states},
            {"cap_oracle", cap_oracle}, {"format", format}};
  }

  static Manifest from_json(const json& j) {
    Manifest m;
    try {
      m.command = j.at("command").get<std::string>();
      m.space = j.value("space", "");
      m.complex = j.value("complex", "");
      m.subset = j.value("subset", "full");
      m.invariant = j.value("invariant", "all");
      m.nu = j.value("nu", "all");
      m.check = j.value("check", "");
      m.seed = j.value("seed", std::uint64_t{1});
      m.sizes = j.value("sizes", "3..7");
      m.count = j.value("count", 200);
      m.density = j.value("density", 0.35);
      m.cap_maps = j.value("cap_maps", std::size_t{5000});
      m.cap_states = j.value("cap_states", std::size_t{200'000});
      m.cap_oracle = j.value("cap_oracle", std::uint64_t{1'000'000});
      m.format = j.value("format", "json");
    } catch (const json::exception& e) {
      throw InputError(std::string("bad manifest: ") + e.what(), "manifest");
    }
    return m;
  }

  SearchLimits limits() const { return SearchLimits{cap_states}; }
};

std::pair<int, int> parse_sizes(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("sizes must look like 3..7", "sizes");
  }
}

json labels_json(const FinSpace& s, PointSet a) { return s.label_list(a); }

json value_json(CategoryValue v) { return v.is_infinite() ? json("inf") : json(v.value()); }

json cover_json(const FinSpace& s, const CoverResult& r) {
  json witness = json::array();
  for (const PointSet w : r.witness) witness.push_back(labels_json(s, w));
  return {{"value", value_json(r.value)}, {"witness", witness}, {"status", "ok"}};
}

const std::vector<std::string> kInvariants = {"nu_H", "nu_LS", "nu_c", "nu_CL", "cuplength"};
const std::vector<std::string> kCategories = {"nu_H", "nu_LS", "nu_c", "nu_CL"};

std::vector<std::string> selected(const std::string& choice, const std::vector<std::string>& all,
                                  const char* field) {
  if (choice == "all") return all;
  for (const auto& name : all)
    if (name == choice) return {choice};
  throw InputError("unknown " + std::string(field) + " '" + choice + "'", field);
}

SpacePtr space_of(const Manifest& m) {
  if (!m.space.empty()) return share(load_space(m.space));
  if (!m.complex.empty()) return share(face_poset(load_complex(m.complex)));
  throw InputError("one of --space or --complex is required", "space");
}

CategoryFn category_by_name(const std::string& name, const AnalysisPtr& a) {
  if (name == "nu_H") return category_nu_H(a);
  if (name == "nu_LS") return category_nu_LS(a);
  if (name == "nu_c") return category_nu_c(a);
  return category_nu_CL(a);
}

// Axioms each category is known to satisfy; failures of these are defects.
AxiomSet claimed_axioms(const std::string& name) {
  if (name == "nu_H") return kAllAxioms;
  if (name == "nu_LS") return kMonotone | kSubadditive | kHomotopy | kSingleton;
  return kMonotone | kSubadditive | kOpenExtension | kHomotopy;
}

// ---------------------------------------------------------------------------

json cmd_compute(const Manifest& m, int& exit_code) {
  const auto names = selected(m.invariant, kInvariants, "invariant");
  json result = json::object();
  if (!m.complex.empty() && m.space.empty() && m.invariant == "cuplength") {
    const SimplicialComplex k = load_complex(m.complex);
    const CohomologyRing ring(k);
    result["betti"] = ring.betti_numbers();
    result["euler_characteristic"] = k.euler_characteristic();
    result["cuplength"] = {{"value", ring.cuplength(PointSet::first(k.vertex_count()).bits())},
                           {"witness", json::array()},
                           {"status", "ok"}};
    return result;
  }
  const SpacePtr s = space_of(m);
  const auto analysis = std::make_shared<const SpaceAnalysis>(s, m.limits());
  const PointSet a = s->parse_subset(m.subset);
  result["subset"] = labels_json(*s, a);
  for (const auto& name : names) {
    try {
      if (name == "nu_H") {
        result[name] = cover_json(*s, analysis->nu_H(a));
      } else if (name == "nu_LS") {
        result[name] = cover_json(*s, analysis->nu_LS(a));
      } else if (name == "nu_c") {
        result[name] = cover_json(*s, analysis->nu_c(a));
      } else if (name == "nu_CL") {
        result[name] = {{"value", value_json(analysis->nu_CL(a))},
                        {"witness", labels_json(*s, s->open_hull(a))},
                        {"status", "ok"}};
      } else {
        result[name] = {{"value", a.empty() ? 0 : analysis->cuplength(a)},
                        {"witness", json::array()},
                        {"status", "ok"}};
      }
    } catch (const UndecidedError& e) {
      result[name] = {{"value", nullptr}, {"witness", json::array()}, {"status", "undecided"},
                      {"reason", e.what()}};
      exit_code = kCapError;
    }
  }
  if (names.size() == 1) {
    json single = result[names.front()];
    single["subset"] = result["subset"];
    return single;
  }
  return result;
}

json cmd_axioms(const Manifest& m, int& exit_code) {
  const SpacePtr s = space_of(m);
  const auto analysis = std::make_shared<const SpaceAnalysis>(s, m.limits());
  AxiomCheckConfig cfg;
  cfg.map_cap = m.cap_maps;
  cfg.seed = m.seed;
  json out = json::array();
  for (const auto& name : selected(m.nu, kCategories, "nu")) {
    const CheckReport r = check_axioms(category_by_name(name, analysis), cfg);
    json j = r.to_json();
    json claimed = json::array();
    bool ok = true;
    for (int k = 0; k < 5; ++k)
      if (claimed_axioms(name) & (1U << k)) {
        claimed.push_back(axiom_name(k));
        ok = ok && r.checks[k].passed();
      }
    j["claimed"] = claimed;
    j["claimed_hold"] = ok;
    if (!ok) exit_code = kCheckFailed;
    out.push_back(j);
  }
  return {{"space", space_json(*s)}, {"reports", out}};
}

json suite_json(const SuiteReport& r) {
  json j = r.to_json();
  j["status"] = r.violations > 0 ? "fail" : r.exercised == 0 ? "skipped" : "pass";
  j.erase("min_exercised");
  return j;
}

json report_status(const CheckReport& r) {
  json j = r.to_json();
  j["status"] = r.passed() ? "pass" : "fail";
  return j;
}

json cmd_relations(const Manifest& m, int& exit_code) {
  const SpacePtr s = space_of(m);
  const auto analysis = std::make_shared<const SpaceAnalysis>(s, m.limits());
  const std::string& check = m.check;
  json out{{"space", space_json(*s)}, {"check", check}};
  json reports = json::array();
  bool failed = false;
  auto add = [&](json j) {
    failed = failed || j["status"] == "fail";
    reports.push_back(std::move(j));
  };
  const auto cats = selected(m.nu, kCategories, "nu");

  if (check == "prop42") {
    for (const auto& name : cats) add(report_status(check_prop42(category_by_name(name, analysis))));
    add(report_status(check_prop42(collection_T_H(analysis))));
    add(report_status(check_prop42(collection_T_c(analysis))));
  } else if (check.starts_with("lemma41")) {
    int n = 1;
    if (check.size() > 7) {
      if (check[7] != ':') throw InputError("expected lemma41:n", "check");
      try {
        n = std::stoi(check.substr(8));
      } catch (const std::exception&) {
        throw InputError("expected lemma41:n with a positive integer n", "check");
      }
      if (n < 1) throw InputError("n must be positive", "check");
    }
    for (const auto& name : cats) add(report_status(check_lemma41(category_by_name(name, analysis), n)));
  } else if (check == "cor43") {
    add(report_status(check_cor43(category_nu_H(analysis), collection_T_H(analysis))));
    add(report_status(check_cor43(category_nu_c(analysis), collection_T_c(analysis))));
    add(report_status(check_cor43(collection_T_H(analysis), category_nu_H(analysis))));
    add(report_status(check_cor43(collection_T_c(analysis), category_nu_c(analysis))));
  } else if (check == "prop33") {
    const CheckReport r = check_prop33(analysis);
    json j = r.to_json();
    const CheckResult* eq = r.find("nu_LS = bar(nu_H)");
    j["status"] = !r.passed() ? "fail" : eq->status;
    add(std::move(j));
  } else {
    GenConfig cfg;
    cfg.seed = m.seed;
    cfg.map_cap = m.cap_maps;
    cfg.oracle_cap = m.cap_oracle;
    cfg.limits = m.limits();
    const std::vector<FinSpace> one{*s};
    if (check == "chain") {
      add(suite_json(run_chain_suite(one, cfg)));
    } else if (check == "lemma31") {
      add(suite_json(run_lemma31_suite(one, cfg)));
    } else if (check == "tcollection") {
      add(suite_json(run_tcollection_suite(one, cfg)));
    } else if (check == "prop51") {
      add(suite_json(run_prop51_suite(one, cfg, 100)));
    } else if (check == "lemma57") {
      add(suite_json(run_lemma57_suite(one, cfg)));
    } else if (check == "tc_identity") {
      add(suite_json(run_tc_identity_suite(one, cfg)));
    } else if (check == "nu_cl_fast_path") {
      add(suite_json(run_nu_cl_fast_path_suite(one, cfg)));
    } else {
      throw InputError("unknown check '" + check + "'", "check");
    }
  }
  std::string status = failed ? "fail" : "pass";
  if (!failed && std::all_of(reports.begin(), reports.end(),
                             [](const json& j) { return j["status"] == "skipped"; }))
    status = "skipped";
  out["status"] = status;
  out["reports"] = reports;
  if (failed) exit_code = kCheckFailed;
  return out;
}

json cmd_verify(const Manifest& m, int& exit_code) {
  GenConfig cfg;
  cfg.seed = m.seed;
  std::tie(cfg.min_size, cfg.max_size) = parse_sizes(m.sizes);
  cfg.count = m.count;
  cfg.density = m.density;
  cfg.map_cap = m.cap_maps;
  cfg.oracle_cap = m.cap_oracle;
  cfg.limits = m.limits();
  json report = run_full_report(cfg);
  if (!report["passed"].get<bool>()) exit_code = kCheckFailed;
  return report;
}

json cmd_demo(const Manifest& m) {
  json spaces = json::array();
  struct Entry {
    const char* name;
    const char* expected;
  };
  const Entry entries[] = {
      {"chain(3)", "every invariant 1 on the full space (trivial: a cone is contractible)"},
      {"antichain(3)", "nu_H = nu_LS = 3, one per component; nu_c = nu_CL = 1, no positive-degree cohomology (trivial)"},
      {"circle4", "nu_H = nu_LS = nu_c = nu_CL = cuplength = 2 (derived)"},
      {"wedge2circles", "nu_H = nu_c = 3, nu_LS = nu_CL = 2 (derived by hand from the up-sets and down-sets)"},
      {"sphere(2)", "cuplength 2 (derived)"},
  };
  for (const auto& e : entries) {
    const SpacePtr s = share(*builtin_space(e.name));
    const auto a = std::make_shared<const SpaceAnalysis>(s, m.limits());
    const PointSet all = s->all();
    spaces.push_back({{"name", e.name},
                      {"points", s->size()},
                      {"expected", e.expected},
                      {"nu_H", value_json(a->nu_H(all).value)},
                      {"nu_LS", value_json(a->nu_LS(all).value)},
                      {"nu_c", value_json(a->nu_c(all).value)},
                      {"nu_CL", value_json(a->nu_CL(all))},
                      {"cuplength", a->cuplength(all)},
                      {"betti", a->cohomology().betti_numbers()}});
  }
  {
    const SpacePtr s = share(*builtin_space("torus16"));
    const CohomologyRing ring = space_cohomology(*s);
    spaces.push_back({{"name", "torus16"},
                      {"points", s->size()},
                      {"expected", "F2 Betti (1, 2, 1), cuplength 3 (derived)"},
                      {"cuplength", ring.cuplength(s->all().bits())},
                      {"betti", ring.betti_numbers()}});
  }
  json complexes = json::array();
  const std::pair<const char*, const char*> known[] = {
      {"rp2_6", "F2 Betti (1, 1, 1), cuplength 3 (derived)"},
      {"torus7", "F2 Betti (1, 2, 1), cuplength 3 (derived)"},
  };
  for (const auto& [name, expected] : known) {
    const SimplicialComplex k = *builtin_complex(name);
    const CohomologyRing ring(k);
    complexes.push_back({{"name", name},
                         {"vertices", k.vertex_count()},
                         {"f_vector", k.f_vector()},
                         {"euler_characteristic", k.euler_characteristic()},
                         {"expected", expected},
                         {"betti", ring.betti_numbers()},
                         {"cuplength", ring.cuplength(PointSet::first(k.vertex_count()).bits())}});
  }
  return {{"spaces", spaces}, {"complexes", complexes}};
}

json run(const Manifest& m, int& exit_code) {
  if (m.format != "json" && m.format != "markdown")
    throw InputError("format must be json or markdown", "format");
  json result;
  if (m.command == "compute") {
    result = cmd_compute(m, exit_code);
  } else if (m.command == "axioms") {
    result = cmd_axioms(m, exit_code);
  } else if (m.command == "relations") {
    result = cmd_relations(m, exit_code);
  } else if (m.command == "verify") {
    result = cmd_verify(m, exit_code);
  } else if (m.command == "demo") {
    result = cmd_demo(m);
  } else {
    throw InputError("unknown command '" + m.command + "'", "command");
  }
  return {{"manifest", m.to_json()}, {"result", result}};
}

// ---------------------------------------------------------------------------

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const json& j) {
  if (j.is_object()) return false;
  if (j.is_array())
    return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive() || (e.is_array() && is_flat(e)); });
  return true;
}

void render_markdown(std::ostream& out, const json& j, int depth, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << indent << "- **" << key << "**: " << (value.is_array() ? value.dump() : scalar_text(value)) << "\n";
      } else if (depth < 3) {
        out << "\n" << std::string(depth + 1, '#') << " " << key << "\n\n";
        render_markdown(out, value, depth + 1, "");
      } else {
        out << indent << "- **" << key << "**:\n";
        render_markdown(out, value, depth + 1, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << indent << "- " << (e.is_array() ? e.dump() : scalar_text(e)) << "\n";
      } else {
        out << indent << "- item " << i << ":\n";
        render_markdown(out, e, depth + 1, indent + "  ");
      }
      ++i;
    }
  } else {
    out << indent << scalar_text(j) << "\n";
  }
}

std::string render(const json& report, const std::string& format) {
  if (format == "markdown") {
    std::ostringstream out;
    out << "# lscat " << report["manifest"]["command"].get<std::string>() << " report\n";
    render_markdown(out, report, 1, "");
    return out.str();
  }
  return report.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + out_path + "'", "out");
  out << text;
}

int report_error(const std::string& kind, const std::exception& e, json extra = json::object()) {
  json err{{"kind", kind}, {"message", e.what()}};
  for (auto& [k, v] : extra.items()) err[k] = v;
  std::cerr << json{{"error", err}}.dump(2) << "\n";
  return kind == "size_cap" || kind == "undecided" ? kCapError : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lusternik-Schnirelmann type categories of finite spaces"};
  app.require_subcommand(1);
  Manifest m;
  std::string out_path;
  std::string replay_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap-maps", m.cap_maps, "Cap on enumerated maps homotopic to the identity");
    sub->add_option("--cap-states", m.cap_states, "Cap on maps visited by one homotopy search");
    sub->add_option("--cap-oracle", m.cap_oracle, "Cap on maps enumerated by the oracle");
    sub->add_option("--seed", m.seed, "Random seed");
    sub->add_option("--format", m.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--out", out_path, "Write the report to this file");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--space", m.space, "Builtin space name or JSON file");
    sub->add_option("--complex", m.complex, "Builtin complex name or JSON file (uses its face poset)");
  };

  auto* compute = app.add_subcommand("compute", "Compute invariants of a subset");
  add_input(compute);
  compute->add_option("--subset", m.subset, "Comma-separated labels, 'full' or ''");
  compute->add_option("--invariant", m.invariant, "nu_H|nu_LS|nu_c|nu_CL|cuplength|all");
  add_common(compute);

  auto* axioms = app.add_subcommand("axioms", "Check the category axioms");
  add_input(axioms);
  axioms->add_option("--nu", m.nu, "nu_H|nu_LS|nu_c|nu_CL|all");
  add_common(axioms);

  auto* relations = app.add_subcommand("relations", "Check a relation between invariants");
  add_input(relations);
  relations
      ->add_option("--check", m.check,
                   "prop42|prop33|lemma41:n|cor43|chain|lemma31|tcollection|prop51|lemma57|"
                   "tc_identity|nu_cl_fast_path")
      ->required();
  relations->add_option("--nu", m.nu, "Category for prop42/lemma41: nu_H|nu_LS|nu_c|nu_CL|all");
  add_common(relations);

  auto* verify = app.add_subcommand("verify", "Run every suite on random and targeted spaces");
  verify->add_option("--sizes", m.sizes, "Point count range, e.g. 3..7");
  verify->add_option("--count", m.count, "Number of random spaces");
  verify->add_option("--density", m.density, "Edge probability of the random DAGs");
  add_common(verify);

  auto* demo = app.add_subcommand("demo", "List builtin spaces and complexes with their invariants");
  add_common(demo);

  auto* replay = app.add_subcommand("replay", "Re-run the manifest of a previous report");
  replay->add_option("report", replay_path, "Report file")->required();
  replay->add_option("--out", out_path, "Write the report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (replay->parsed()) {
      const json doc = json::parse(read_text_file(replay_path), nullptr, false);
      if (doc.is_discarded() || !doc.is_object() || !doc.contains("manifest"))
        throw InputError("not a report with a manifest", "manifest");
      m = Manifest::from_json(doc["manifest"]);
    } else {
      m.command = app.get_subcommands().front()->get_name();
    }
    int exit_code = kOk;
    const json report = run(m, exit_code);
    emit(render(report, m.format), out_path);
    return exit_code;
  } catch (const ParseError& e) {
    return report_error("parse", e, {{"line", e.line()}, {"column", e.column()}});
  } catch (const InputError& e) {
    return report_error("input", e, {{"field", e.field()}});
  } catch (const SizeCapError& e) {
    return report_error("size_cap", e);
  } catch (const UndecidedError& e) {
    return report_error("undecided", e);
  } catch (const EmptySubsetError& e) {
    return report_error("input", e);
  } catch (const Error& e) {
    return report_error("error", e);
  }
}
