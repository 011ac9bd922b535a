#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ordalg/assignment.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/decomposition.hpp"
#include "ordalg/dsl.hpp"
#include "ordalg/error.hpp"
#include "ordalg/fixtures.hpp"
#include "ordalg/json_io.hpp"
#include "ordalg/pc_structures.hpp"
#include "ordalg/search.hpp"

namespace ordalg {

namespace {

namespace fs = std::filesystem;

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

// A path to a .ord or .json file; a missing file whose stem names a
// built-in fixture loads that fixture.
Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    const std::string stem = fs::path(path).stem().string();
    for (const auto& f : fixture_texts())
      if (f.name == stem) return parse(f.text);
    throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  if (fs::path(path).extension() == ".json") {
    Json j;
    try {
      j = Json::parse(text.str());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::syntax_error, std::string("malformed JSON: ") + e.what());
    }
    if (j.contains("operations")) return document_of(algebra_from_json(j), fs::path(path).stem().string());
    return Document{{{fs::path(path).stem().string(), poset_from_json(j)}}, {}};
  }
  return parse(text.str());
}

const PosetDef& pick_poset(const Document& doc, const std::string& name) {
  if (!name.empty()) {
    if (const auto* p = doc.find_poset(name)) return *p;
    throw Error(ErrorCode::semantic_error, "no poset named '" + name + "'");
  }
  if (doc.posets.empty()) throw Error(ErrorCode::semantic_error, "document has no poset");
  return doc.posets.front();
}

// Named algebra, else the first with a profile, else the first.
const AlgebraDef& pick_algebra(const Document& doc, const std::string& name) {
  if (!name.empty()) {
    if (const auto* a = doc.find_algebra(name)) return *a;
    throw Error(ErrorCode::semantic_error, "no algebra named '" + name + "'");
  }
  for (const auto& a : doc.algebras)
    if (a.profile) return a;
  if (doc.algebras.empty()) throw Error(ErrorCode::semantic_error, "document has no algebra");
  return doc.algebras.front();
}

Profile need_profile(const std::string& name) {
  auto p = parse_profile(name);
  if (!p) throw Error(ErrorCode::invalid_argument, "unknown profile '" + name + "' (pc stone rpc spc spc1 sspc)");
  return *p;
}

Json envelope(const std::string& command) { return Json{{"schema", json_schema}, {"command", command}}; }

void print_report(std::ostream& out, const Report& r, const std::vector<std::string>& labels) {
  out << r.name << ": " << (r.holds ? "holds" : "fails") << "\n";
  if (r.witness) out << "  witness: " << format_assignment(*r.witness, labels) << "\n";
  if (!r.detail.empty()) out << "  " << r.detail << "\n";
}

struct Options {
  bool json = false;
};

int cmd_check(std::ostream& out, const Options& o, const std::string& file, const std::string& cls,
              const std::string& poset_name, const std::string& algebra_name, bool derived) {
  Document doc = load(file);
  if (!algebra_name.empty() && cls.empty()) {
    const AlgebraDef& def = pick_algebra(doc, algebra_name);
    if (!def.profile) throw Error(ErrorCode::invalid_argument, "algebra '" + def.name + "' has no profile");
    Algebra a = materialize(doc, def);
    ReportSet reports = verify_assigned_conditions(a, *def.profile);
    if (derived) {
      auto extra = verify_derived_identities(a, *def.profile);
      reports.items.insert(reports.items.end(), extra.items.begin(), extra.items.end());
    }
    if (o.json) {
      Json j = envelope("check");
      j["algebra"] = def.name;
      j["profile"] = to_string(*def.profile);
      j["result"] = to_json(reports, a.labels());
      out << j.dump(2) << "\n";
    } else {
      for (const auto& r : reports.items) print_report(out, r, a.labels());
    }
    return reports.holds() ? exit_holds : exit_fails;
  }

  const PosetDef& pd = pick_poset(doc, poset_name);
  const Poset& p = pd.poset;
  std::vector<std::string> classes;
  if (cls.empty()) {
    for (auto a : predicate_atoms()) classes.emplace_back(a);
  } else {
    classes.push_back(cls);
  }
  bool all = true;
  Json results = Json::array();
  for (const auto& c : classes) {
    if (auto kind = parse_pc_kind(c)) {
      // Short and long names share a kind; list each once.
      if (cls.empty() && !parse_profile(c)) continue;
      auto r = classify(p, *kind);
      all = all && r.holds;
      if (o.json) {
        results.push_back(to_json(r, p));
      } else {
        out << c << ": " << (r.holds ? "holds" : "fails") << "\n";
        if (r.witness) {
          if (!r.witness->elements.empty()) {
            static const char* names[] = {"x", "y", "z"};
            out << "  witness:";
            for (std::size_t i = 0; i < r.witness->elements.size(); ++i)
              out << (i ? ", " : " ") << names[i] << "=" << p.label(r.witness->elements[i]);
            out << "\n";
          }
          out << "  " << r.witness->reason << "\n";
        }
      }
    } else if (c == "distributive" || c == "lattice") {
      Report r = c == "distributive" ? is_distributive(p) : is_lattice(p);
      r.name = c;
      all = all && r.holds;
      if (o.json)
        results.push_back(to_json(r, p.labels()));
      else
        print_report(out, r, p.labels());
    } else {
      const bool v = evaluate_atom(p, c);
      all = all && v;
      if (o.json)
        results.push_back(Json{{"name", c}, {"holds", v}});
      else
        out << c << ": " << (v ? "holds" : "fails") << "\n";
    }
  }
  if (o.json) {
    Json j = envelope("check");
    j["poset"] = pd.name;
    j["results"] = std::move(results);
    out << j.dump(2) << "\n";
  }
  // Without --class this is a survey; the exit code reflects only an
  // explicit question.
  return cls.empty() || all ? exit_holds : exit_fails;
}

int cmd_assign(std::ostream& out, const Options& o, const std::string& file, const std::string& profile_name,
               const std::string& poset_name, bool count, std::uint64_t index) {
  Document doc = load(file);
  const Profile profile = need_profile(profile_name);
  const PosetDef& pd = pick_poset(doc, poset_name);
  const ChoiceSpace space(pd.poset, needs_join(profile) ? ChoiceFamily::lambda : ChoiceFamily::meet);
  if (count) {
    if (o.json) {
      Json j = envelope("assign");
      j["poset"] = pd.name;
      j["profile"] = to_string(profile);
      j["assignments"] = space.count();
      j["saturated"] = space.count_saturated();
      out << j.dump(2) << "\n";
    } else {
      out << space.count() << (space.count_saturated() ? "+" : "") << "\n";
    }
    return exit_holds;
  }
  if (!space.count_saturated() && index >= space.count())
    throw Error(ErrorCode::invalid_argument, "index " + std::to_string(index) + " out of range (" +
                                                 std::to_string(space.count()) + " assignments)");
  auto cls = classify(pd.poset, profile_class(profile));
  if (!cls.holds) {
    if (o.json) {
      Json j = envelope("assign");
      j["classification"] = to_json(cls, pd.poset);
      out << j.dump(2) << "\n";
    } else {
      out << pd.name << " is not " << to_string(cls.kind) << "\n";
      if (cls.witness) out << "  " << cls.witness->reason << "\n";
    }
    return exit_fails;
  }
  const ChoicePair choice = space.decode(index);
  Algebra a = assign_algebra(pd.poset, profile, choice);
  if (o.json) {
    Json j = envelope("assign");
    j["poset"] = pd.name;
    j["profile"] = to_string(profile);
    j["index"] = index;
    j["algebra"] = to_json(a);
    out << j.dump(2) << "\n";
    return exit_holds;
  }
  AlgebraDef def{pd.name + "_" + std::string(to_string(profile)) + "_" + std::to_string(index), pd.name, profile,
                 choice.meet, choice.join, {}};
  for (const auto& op : a.operations())
    if (op.symbol() != sym::meet && op.symbol() != sym::join) def.tables.push_back(op);
  out << serialize(pd) << "\n" << serialize(def, pd.poset);
  return exit_holds;
}

int cmd_audit(std::ostream& out, const Options& o, const std::string& file, const std::string& profile_name,
              const std::string& poset_name, std::uint64_t budget, std::uint64_t seed) {
  Document doc = load(file);
  const PosetDef& pd = pick_poset(doc, poset_name);
  std::vector<Profile> profiles;
  if (profile_name == "all")
    profiles.assign(std::begin(all_profiles), std::end(all_profiles));
  else
    profiles.push_back(need_profile(profile_name));
  AuditOptions options;
  options.budget = budget;
  options.seed = seed;
  bool consistent = true;
  Json reports = Json::array();
  for (Profile p : profiles) {
    auto r = theorem_equivalence_audit(pd.poset, p, options);
    consistent = consistent && r.consistent();
    if (o.json) {
      reports.push_back(to_json(r));
      continue;
    }
    out << to_string(p) << ": ";
    if (!r.applicable) {
      out << "skipped (" << r.skipped_reason << ")\n";
      continue;
    }
    out << (r.consistent() ? "consistent" : "DIVERGENT") << ", poset " << (r.poset_verdict ? "in" : "not in")
        << " class, " << r.checked << " of " << r.total << (r.total_saturated ? "+" : "") << " assignments"
        << (r.sampled ? " (sampled)" : "") << "\n";
    for (const auto& d : r.divergences)
      out << "  assignment " << d.index << ": algebra " << (d.algebra_verdict ? "satisfies" : "fails")
          << " the conditions" << (d.detail.empty() ? "" : " (" + d.detail + ")") << "\n";
  }
  if (o.json) {
    Json j = envelope("audit");
    j["poset"] = pd.name;
    j["reports"] = std::move(reports);
    out << j.dump(2) << "\n";
  }
  return consistent ? exit_holds : exit_fails;
}

int cmd_con(std::ostream& out, const Options& o, const std::string& file, const std::string& algebra_name,
            bool props, bool terms, const std::string& unit_label) {
  Document doc = load(file);
  const AlgebraDef& def = pick_algebra(doc, algebra_name);
  Algebra a = materialize(doc, def);
  auto lat = congruence_lattice(a);
  Json j = envelope("con");
  j["algebra"] = def.name;
  j["lattice"] = to_json(lat, a.labels());
  if (!o.json) {
    out << def.name << ": " << lat.size() << " congruences"
        << (lat.validated ? " (validated by partition scan)" : " (partition scan skipped: size guard)") << "\n";
    for (const auto& c : lat.elements) out << "  " << c.to_string(a.labels()) << "\n";
  }
  int code = exit_holds;
  if (props) {
    std::optional<Element> unit;
    if (!unit_label.empty())
      unit = a.index_of(unit_label);
    else if (def.profile)
      unit = designated_unit(a, *def.profile);
    auto p = congruence_properties(lat, a.labels(), unit);
    j["properties"] = to_json(p);
    if (!o.json) {
      out << "permutable: " << (p.permutable ? "yes" : "no") << "\n";
      if (!p.permutable_witness.empty()) out << "  " << p.permutable_witness << "\n";
      out << "distributive: " << (p.distributive ? "yes" : "no") << "\n";
      if (!p.distributive_witness.empty()) out << "  " << p.distributive_witness << "\n";
      out << "arithmetical: " << (p.arithmetical ? "yes" : "no") << "\n";
      out << "weakly regular: " << (p.weakly_regular ? (*p.weakly_regular ? "yes" : "no") : "no unit") << "\n";
      if (!p.weakly_regular_witness.empty()) out << "  " << p.weakly_regular_witness << "\n";
    }
  }
  if (terms) {
    if (!def.profile) throw Error(ErrorCode::invalid_argument, "algebra '" + def.name + "' has no profile");
    auto reports = verify_term_conditions(a, *def.profile);
    j["terms"] = to_json(reports, a.labels());
    for (const auto& t : reports) {
      if (!t.holds()) code = exit_fails;
      if (o.json) continue;
      out << to_string(t.scheme) << " terms: " << (t.holds() ? "hold" : "fail") << "\n";
      for (const auto& r : t.identities.items)
        if (!r.holds) print_report(out, r, a.labels());
    }
  }
  if (o.json) out << j.dump(2) << "\n";
  return code;
}

int cmd_decompose(std::ostream& out, const Options& o, const std::string& file, const std::string& algebra_name) {
  Document doc = load(file);
  const AlgebraDef& def = pick_algebra(doc, algebra_name);
  Algebra a = materialize(doc, def);
  auto f = decompose(a);
  if (o.json) {
    Json j = envelope("decompose");
    j["algebra"] = def.name;
    j["factorization"] = to_json(f, a.labels());
    out << j.dump(2) << "\n";
    return exit_holds;
  }
  if (!f.decomposable) {
    out << def.name << ": directly indecomposable\n";
    return exit_holds;
  }
  out << def.name << " ≅ A/Θ × A/Φ with |A/Θ|=" << f.first->size() << ", |A/Φ|=" << f.second->size() << "\n";
  out << "Θ = " << f.pair->theta().to_string(a.labels()) << "\n";
  out << "Φ = " << f.pair->phi().to_string(a.labels()) << "\n";
  for (Element i = 0; i < a.size(); ++i)
    out << "  " << a.label(i) << " ↦ (" << f.first->label(f.map[i].first) << ","
        << f.second->label(f.map[i].second) << ")\n";
  return exit_holds;
}

int cmd_product(std::ostream& out, const Options& o, const std::string& f1, const std::string& f2,
                const std::string& n1, const std::string& n2) {
  Document d1 = load(f1), d2 = load(f2);
  Algebra a1 = materialize(d1, pick_algebra(d1, n1));
  Algebra a2 = materialize(d2, pick_algebra(d2, n2));
  Algebra p = direct_product(a1, a2);
  if (o.json) {
    Json j = envelope("product");
    j["algebra"] = to_json(p);
    out << j.dump(2) << "\n";
    return exit_holds;
  }
  out << serialize(document_of(p, "product"));
  return exit_holds;
}

std::pair<std::size_t, std::size_t> size_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      auto n = std::stoul(s);
      return {n, n};
    }
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument, "size range must look like 4 or 4..6");
  }
}

int cmd_search(std::ostream& out, const Options& o, const std::string& range, const std::string& where, bool random,
               std::uint64_t seed, std::uint64_t count, std::size_t limit) {
  SearchSpec spec;
  std::tie(spec.min_size, spec.max_size) = size_range(range);
  spec.where = Predicate::parse(where);
  spec.mode = random ? SearchSpec::Mode::random : SearchSpec::Mode::exhaustive;
  spec.seed = seed;
  spec.count = count;
  spec.limit = limit;
  auto result = search(spec);

  // Every hit goes through text and is checked again from scratch.
  Document hits;
  for (std::size_t i = 0; i < result.hits.size(); ++i)
    hits.posets.push_back({"hit" + std::to_string(i + 1), result.hits[i]});
  const std::string text = serialize(hits);
  const Document reparsed = parse(text);
  std::size_t inconsistent = 0;
  for (const auto& p : reparsed.posets)
    if (!spec.where(p.poset)) ++inconsistent;

  if (o.json) {
    Json j = envelope("search");
    j["where"] = spec.where.to_string();
    j["examined"] = result.examined;
    Json arr = Json::array();
    for (const auto& p : result.hits) arr.push_back(to_json(p));
    j["hits"] = std::move(arr);
    j["revalidation_failures"] = inconsistent;
    out << j.dump(2) << "\n";
  } else {
    out << "# " << result.hits.size() << " hit(s) among " << result.examined << " posets for "
        << spec.where.to_string() << "\n";
    if (!text.empty()) out << "\n" << text;
  }
  return inconsistent == 0 ? exit_holds : exit_fails;
}

int cmd_fixtures(std::ostream& out, const std::string& name, const std::string& dir) {
  bool found = name.empty();
  for (const auto& f : fixture_texts()) {
    if (!name.empty() && f.name != name) continue;
    found = true;
    if (!dir.empty()) {
      fs::create_directories(dir);
      std::ofstream file(fs::path(dir) / (std::string(f.name) + ".ord"), std::ios::binary);
      file << f.text;
      if (!file) throw Error(ErrorCode::invalid_argument, "cannot write to '" + dir + "'");
      out << (fs::path(dir) / (std::string(f.name) + ".ord")).string() << "\n";
    } else {
      out << f.text << "\n";
    }
  }
  if (!found) throw Error(ErrorCode::invalid_argument, "unknown fixture '" + name + "'");
  return exit_holds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudocomplemented posets and their assigned algebras", "ordalg"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit a JSON report");

  std::string file, file2, cls, poset_name, algebra_name, algebra2_name, profile = "pc", unit, range = "1..4",
                                                                            where, name, dir;
  bool derived = false, count = false, props = false, terms = false, random = false;
  std::uint64_t index = 0, budget = 10'000, seed = 0x5eed'0bad'cafeULL, samples = 1000;
  std::size_t limit = 0;

  auto* check = app.add_subcommand("check", "Classify a poset or verify an algebra's conditions");
  check->add_option("file", file, "Poset or algebra file (.ord, .json, or a fixture name)")->required();
  check->add_option("--class", cls, "Class or predicate to test (pc, stone, rpc, spc, spc1, sspc, distributive, ...)");
  check->add_option("--poset", poset_name, "Poset to use");
  check->add_option("--algebra", algebra_name, "Check this algebra's assigned conditions");
  check->add_flag("--derived", derived, "Also check the derived identities");

  auto* assign = app.add_subcommand("assign", "Construct an assigned algebra");
  assign->add_option("file", file)->required();
  assign->add_option("--profile", profile, "pc, stone, rpc, spc, spc1 or sspc");
  assign->add_option("--poset", poset_name);
  assign->add_flag("--count", count, "Only count the directoid or λ-lattice assignments");
  assign->add_option("--index", index, "Assignment number in enumeration order (0 is canonical)");

  auto* audit = app.add_subcommand("audit", "Compare poset and algebra verdicts over assignments");
  audit->add_option("file", file)->required();
  audit->add_option("--profile", profile, "A profile or 'all'");
  audit->add_option("--poset", poset_name);
  audit->add_option("--budget", budget, "Assignments examined before sampling");
  audit->add_option("--seed", seed, "Sampling seed");

  auto* con = app.add_subcommand("con", "Congruence lattice and congruence properties");
  con->add_option("file", file)->required();
  con->add_option("--algebra", algebra_name);
  con->add_flag("--props", props, "Permutability, distributivity, arithmeticity, weak regularity");
  con->add_flag("--terms", terms, "Check the Maltsev, majority and weak-regularity terms");
  con->add_option("--unit", unit, "Label of the constant for weak regularity");

  auto* dec = app.add_subcommand("decompose", "Direct decomposition by a factor pair");
  dec->add_option("file", file)->required();
  dec->add_option("--algebra", algebra_name);

  auto* prod = app.add_subcommand("product", "Direct product of two algebras");
  prod->add_option("first", file)->required();
  prod->add_option("second", file2)->required();
  prod->add_option("--algebra1", algebra_name);
  prod->add_option("--algebra2", algebra2_name);

  auto* srch = app.add_subcommand("search", "Search small posets for a predicate");
  srch->add_option("--n", range, "Size or range, e.g. 4..6");
  srch->add_option("--where", where, "Predicate, e.g. 'spc1 and not sspc'")->required();
  srch->add_flag("--random", random, "Sample random posets instead of enumerating");
  srch->add_option("--seed", seed);
  srch->add_option("--count", samples, "Random samples");
  srch->add_option("--limit", limit, "Stop after this many hits");

  auto* fix = app.add_subcommand("fixtures", "Print or write the built-in fixtures");
  fix->add_option("--name", name);
  fix->add_option("--write", dir, "Directory for .ord files");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*check) return cmd_check(out, o, file, cls, poset_name, algebra_name, derived);
    if (*assign) return cmd_assign(out, o, file, profile, poset_name, count, index);
    if (*audit) return cmd_audit(out, o, file, profile == "pc" && !audit->count("--profile") ? "all" : profile,
                                 poset_name, budget, seed);
    if (*con) return cmd_con(out, o, file, algebra_name, props, terms, unit);
    if (*dec) return cmd_decompose(out, o, file, algebra_name);
    if (*prod) return cmd_product(out, o, file, file2, algebra_name, algebra2_name);
    if (*srch) return cmd_search(out, o, range, where, random, seed, samples, limit);
    if (*fix) return cmd_fixtures(out, name, dir);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::missing_structure) {
      err << "ordalg: " << e.what() << "\n";
      return exit_fails;
    }
    err << "ordalg: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "ordalg: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace ordalg
