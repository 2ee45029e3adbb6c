// tcell: construct, verify and probe 2-cell structures over finite monoids.
//
// Exit codes: 0 clean / nothing found, 1 violations or a counterexample
// was found, 2 usage or I/O error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcell/bla.hpp"
#include "tcell/enumerate.hpp"
#include "tcell/mon_basic.hpp"
#include "tcell/registry.hpp"
#include "tcell/semibim.hpp"
#include "tcell/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(const std::string& code) {
  static const std::vector<std::string> usage = {
      "io",           "format",    "unknown-monoid",          "unknown-case",
      "too-large",    "not-a-group", "name-clash",            "endpoint-mismatch",
      "element-mode-unsupported"};
  for (const auto& u : usage)
    if (u == code) return true;
  return false;
}

struct Options {
  tcell::Registry registry;
  std::vector<std::string> loads;
  bool json = false;
  long long cap = -1;
  int exit_code = kExitOk;
};

std::vector<const tcell::FinMonoid*> resolve_objects(Options& opt,
                                                     const std::vector<std::string>& names) {
  if (names.empty()) throw tcell::Error("format", "--objects needs at least one name");
  std::vector<const tcell::FinMonoid*> out;
  for (const auto& n : names) out.push_back(opt.registry.get(n));
  return out;
}

void emit(const Options& opt, const ordered_json& doc, const std::string& plain) {
  if (opt.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << plain << "\n";
}

std::string report_summary(const tcell::ViolationReport& rep) {
  if (rep.ok()) return "ok (" + std::to_string(rep.checks) + " checks)";
  std::string s = "FAIL: " + std::to_string(rep.violations.size()) + " violation(s)";
  if (rep.suppressed > 0) s += " (+" + std::to_string(rep.suppressed) + " beyond cap)";
  s += " in " + std::to_string(rep.checks) + " checks; first: " + rep.violations[0].axiom;
  return s;
}

int finish_report(Options& opt, const tcell::ViolationReport& rep) {
  emit(opt, rep.to_json(), report_summary(rep));
  return rep.ok() ? kExitOk : kExitFound;
}

// "semibim:<path>" resolves to the one-object structure embedded from the
// semibimodule in that file.
bool is_semibim_id(const std::string& id) { return id.rfind("semibim:", 0) == 0; }

int cmd_cell_check(Options& opt, const std::string& id,
                   const std::vector<std::string>& objects) {
  if (is_semibim_id(id)) {
    auto sb = tcell::semibim_from_json(
        tcell::read_json_file(id.substr(std::string("semibim:").size())), opt.registry);
    tcell::EmbeddedStructure emb(&sb);
    auto rep = tcell::verify_structure_axioms(tcell::OneObjectModel(emb), opt.cap);
    return finish_report(opt, rep);
  }
  auto objs = resolve_objects(opt, objects);
  auto s = tcell::make_structure(id, objs);
  tcell::Context ctx(objs);
  auto rep = tcell::verify_structure_axioms(*s, ctx, opt.cap);
  return finish_report(opt, rep);
}

int cmd_cell_interchange(Options& opt, const std::string& id,
                         const std::vector<std::string>& objects) {
  auto objs = resolve_objects(opt, objects);
  auto s = tcell::make_structure(id, objs);
  tcell::Context ctx(objs);
  auto w = tcell::find_interchange_counterexample(*s, ctx);
  ordered_json doc;
  doc["ok"] = !w.has_value();
  doc["structure"] = id;
  if (w) {
    auto tagged = [&](const tcell::Cell& c) {
      auto j = tcell::cell_to_json(c);
      j["structure"] = id;
      return j;
    };
    ordered_json c;
    c["x"] = tagged(w->x);
    c["y"] = tagged(w->y);
    c["lhs"] = tagged(w->lhs);
    c["rhs"] = tagged(w->rhs);
    doc["counterexample"] = std::move(c);
    emit(opt, doc,
         "counterexample: x=" + tcell::cell_to_string(w->x) +
             " y=" + tcell::cell_to_string(w->y) +
             " lhs=" + tcell::cell_to_string(w->lhs) +
             " rhs=" + tcell::cell_to_string(w->rhs));
    return kExitFound;
  }
  doc["counterexample"] = nullptr;
  emit(opt, doc, "no counterexample; every chained pair is composable");
  return kExitOk;
}

int cmd_cell_morphism(Options& opt, const std::string& from, const std::string& to,
                      const std::vector<std::string>& objects) {
  auto objs = resolve_objects(opt, objects);
  auto sf = tcell::make_structure(from, objs);
  auto st = tcell::make_structure(to, objs);
  tcell::Context ctx(objs);
  tcell::CellMorphism mor{sf.get(), st.get(), [](const tcell::Cell& c) { return c; }};
  auto rep = tcell::verify_cell_morphism(mor, ctx, opt.cap);
  return finish_report(opt, rep);
}

int cmd_monoid_validate(Options& opt, const std::string& path) {
  try {
    tcell::FinMonoid m = tcell::monoid_from_json(tcell::read_json_file(path));
    ordered_json doc;
    doc["ok"] = true;
    doc["monoid"] = tcell::monoid_to_json(m);
    doc["is_group"] = m.is_group;
    emit(opt, doc,
         m.name + ": ok, size " + std::to_string(m.size) +
             (m.is_group ? ", group" : ", monoid"));
    return kExitOk;
  } catch (const tcell::Error& e) {
    if (is_usage_error(e.code())) throw;
    emit(opt, e.to_json(), std::string("invalid: ") + e.what());
    return kExitFound;
  }
}

int cmd_bla_validate(Options& opt, const std::string& path) {
  try {
    auto bla = tcell::bla_from_json(tcell::read_json_file(path), opt.registry);
    ordered_json doc;
    doc["ok"] = true;
    doc["bla"] = tcell::bla_to_json(bla);
    emit(opt, doc,
         "ok: bla on " + bla.B->name + " with |R| = " + std::to_string(bla.r_triples().size()));
    return kExitOk;
  } catch (const tcell::Error& e) {
    if (e.code() != "bla-cond1" && e.code() != "bla-cond2") throw;
    emit(opt, e.to_json(), std::string("invalid: ") + e.what());
    return kExitFound;
  }
}

int cmd_bla_conditions(Options& opt, const std::string& case_id,
                       const std::vector<std::string>& objects, bool element) {
  auto objs = resolve_objects(opt, objects);
  auto s = tcell::make_structure(case_id, objs);
  auto* bs = dynamic_cast<const tcell::BlaCellStructure*>(s.get());
  if (bs == nullptr)
    throw tcell::Error("unknown-case", "'" + case_id + "' does not name a bla-backed family");
  tcell::Context ctx(objs);
  auto rep = tcell::check_six_conditions(
      *bs, ctx, element ? tcell::SixConditionMode::Element : tcell::SixConditionMode::Family,
      opt.cap);
  return finish_report(opt, rep);
}

int cmd_semibim_validate(Options& opt, const std::string& path) {
  try {
    auto sb = tcell::semibim_from_json(tcell::read_json_file(path), opt.registry);
    ordered_json doc;
    doc["ok"] = true;
    doc["semibimodule"] = tcell::semibim_to_json(sb);
    emit(opt, doc, "ok: action of " + sb.M->name + " on " + sb.A->name);
    return kExitOk;
  } catch (const tcell::Error& e) {
    if (e.code() != "semibim-law") throw;
    emit(opt, e.to_json(), std::string("invalid: ") + e.what());
    return kExitFound;
  }
}

int cmd_semibim_embed(Options& opt, const std::string& path, bool check) {
  auto sb = tcell::semibim_from_json(tcell::read_json_file(path), opt.registry);
  tcell::EmbeddedStructure emb(&sb);
  ordered_json doc;
  doc["monoid"] = sb.M->name;
  doc["fiber"] = sb.A->name;
  doc["cells"] = emb.cells().size();
  int code = kExitOk;
  if (check) {
    auto rep = tcell::verify_structure_axioms(tcell::OneObjectModel(emb), opt.cap);
    doc["axioms"] = rep.to_json();
    code = rep.ok() ? kExitOk : kExitFound;
  }
  emit(opt, doc,
       "embedded structure over " + sb.M->name + " with " +
           std::to_string(emb.cells().size()) + " cells" +
           (check ? (code == kExitOk ? "; axioms ok" : "; AXIOMS FAIL") : ""));
  return code;
}

int cmd_semibim_recover(Options& opt, const std::string& path) {
  auto sb = tcell::semibim_from_json(tcell::read_json_file(path), opt.registry);
  tcell::EmbeddedStructure emb(&sb);
  auto res = tcell::recover(tcell::canonical_splitting(emb));
  emit(opt, tcell::recovery_to_json(res),
       res.ok() ? "recovered action and partial sum; all laws hold"
                : "recovery failed; see JSON output for the failing stage");
  return res.ok() ? kExitOk : kExitFound;
}

int cmd_enum_bla(Options& opt, const std::string& name, int shards, bool restricted) {
  const tcell::FinMonoid* B = opt.registry.get(name);
  tcell::EnumOptions eo;
  eo.shards = shards;
  eo.restricted = restricted;
  auto found = tcell::enum_bla(B, eo);
  ordered_json doc;
  doc["monoid"] = name;
  doc["count"] = found.size();
  auto pinned = tcell::load_pinned_counts();
  bool mismatch = false;
  if (!restricted && pinned.contains("enum_bla") && pinned["enum_bla"].contains(name)) {
    const long long expect = pinned["enum_bla"][name].get<long long>();
    doc["pinned"] = expect;
    mismatch = (expect != static_cast<long long>(found.size()));
    doc["match"] = !mismatch;
  }
  emit(opt, doc,
       name + ": " + std::to_string(found.size()) + " structures" +
           (doc.contains("pinned")
                ? (mismatch ? " (MISMATCH vs pinned)" : " (matches pinned)")
                : ""));
  return mismatch ? kExitFound : kExitOk;
}

int cmd_enum_census(Options& opt, const std::string& case_id,
                    const std::vector<std::string>& objects) {
  auto objs = resolve_objects(opt, objects);
  auto s = tcell::make_structure(case_id, objs);
  tcell::Context ctx(objs);
  auto rows = tcell::census(*s, ctx);
  std::string plain;
  for (const auto& r : rows) {
    plain += r.A->name + " => " + r.B->name + ": cells " + std::to_string(r.cells) +
             ", natural " + std::to_string(r.natural) + ", failing pairs " +
             std::to_string(r.nat_fail_pairs) + "\n";
  }
  if (!plain.empty()) plain.pop_back();
  emit(opt, tcell::census_to_json(rows), plain);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-cell structure laboratory"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--load", opt.loads, "monoid JSON files to preload into the registry")
      ->check(CLI::ExistingFile);

  std::string structure_id, from_id, to_id, file, monoid_name, case_id;
  std::vector<std::string> objects;
  bool element = false, check = false, restricted = false;
  int shards = 1;
  int rc = kExitOk;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", opt.json, "emit JSON instead of plain text");
    c->add_option("--cap", opt.cap, "store at most N violations (search is never capped)");
  };

  // Preload registry files before any command body runs.
  auto run = [&](const std::function<int()>& fn) {
    for (const auto& path : opt.loads) opt.registry.load_file(path);
    opt.loads.clear();
    rc = fn();
  };

  auto* monoid = app.add_subcommand("monoid", "validate or generate monoids");
  monoid->require_subcommand(1);
  auto* mval = monoid->add_subcommand("validate", "validate a monoid JSON file");
  mval->add_option("file", file)->required();
  add_common(mval);
  mval->callback([&] { run([&] { return cmd_monoid_validate(opt, file); }); });
  auto* mgen = monoid->add_subcommand("gen", "print a builtin monoid as canonical JSON");
  mgen->add_option("name", monoid_name)->required();
  mgen->callback([&] {
    run([&] {
      std::cout << tcell::monoid_to_json(*opt.registry.get(monoid_name)).dump() << "\n";
      return kExitOk;
    });
  });

  auto* cell = app.add_subcommand("cell", "verify 2-cell structures");
  cell->require_subcommand(1);
  auto* ccheck = cell->add_subcommand("check", "run the structure axiom verifier");
  ccheck->add_option("--structure", structure_id)->required();
  ccheck->add_option("--objects", objects)->delimiter(',');
  add_common(ccheck);
  ccheck->callback([&] { run([&] { return cmd_cell_check(opt, structure_id, objects); }); });
  auto* cinter = cell->add_subcommand("interchange", "search for an interchange counterexample");
  cinter->add_option("--structure", structure_id)->required();
  cinter->add_option("--objects", objects)->delimiter(',')->required();
  add_common(cinter);
  cinter->callback([&] { run([&] { return cmd_cell_interchange(opt, structure_id, objects); }); });
  auto* cmor = cell->add_subcommand("morphism", "check the inclusion morphism between families");
  cmor->add_option("--from", from_id)->required();
  cmor->add_option("--to", to_id)->required();
  cmor->add_option("--objects", objects)->delimiter(',')->required();
  add_common(cmor);
  cmor->callback([&] { run([&] { return cmd_cell_morphism(opt, from_id, to_id, objects); }); });

  auto* bla = app.add_subcommand("bla", "validate parameterizations and check the six conditions");
  bla->require_subcommand(1);
  auto* bval = bla->add_subcommand("validate", "validate a bla JSON file");
  bval->add_option("file", file)->required();
  add_common(bval);
  bval->callback([&] { run([&] { return cmd_bla_validate(opt, file); }); });
  auto* bcond = bla->add_subcommand("conditions", "check the six structure conditions");
  bcond->add_option("--case", case_id)->required();
  bcond->add_option("--objects", objects)->delimiter(',')->required();
  bcond->add_flag("--element", element, "element-level mode (full R, full family)");
  add_common(bcond);
  bcond->callback([&] { run([&] { return cmd_bla_conditions(opt, case_id, objects, element); }); });

  auto* semibim = app.add_subcommand("semibim", "semibimodules and one-object structures");
  semibim->require_subcommand(1);
  auto* sval = semibim->add_subcommand("validate", "validate a semibimodule JSON file");
  sval->add_option("file", file)->required();
  add_common(sval);
  sval->callback([&] { run([&] { return cmd_semibim_validate(opt, file); }); });
  auto* semb = semibim->add_subcommand("embed", "embed as a one-object 2-cell structure");
  semb->add_option("file", file)->required();
  semb->add_flag("--check", check, "also run the axiom verifier");
  add_common(semb);
  semb->callback([&] { run([&] { return cmd_semibim_embed(opt, file, check); }); });
  auto* srec = semibim->add_subcommand("recover", "recover the action through the canonical splitting");
  srec->add_option("file", file)->required();
  add_common(srec);
  srec->callback([&] { run([&] { return cmd_semibim_recover(opt, file); }); });

  auto* en = app.add_subcommand("enum", "exhaustive searches");
  en->require_subcommand(1);
  auto* ebla = en->add_subcommand("bla", "enumerate all valid structures on a carrier");
  ebla->add_option("--monoid", monoid_name)->required();
  ebla->add_option("--shards", shards, "partition the candidate space");
  ebla->add_flag("--restricted", restricted, "formula-generated m/e (for carriers > 2)");
  add_common(ebla);
  ebla->callback([&] { run([&] { return cmd_enum_bla(opt, monoid_name, shards, restricted); }); });
  auto* ecen = en->add_subcommand("census", "cell and naturality counts per object pair");
  ecen->add_option("--case", case_id)->required();
  ecen->add_option("--objects", objects)->delimiter(',')->required();
  add_common(ecen);
  ecen->callback([&] { run([&] { return cmd_enum_census(opt, case_id, objects); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const tcell::Error& e) {
    std::cerr << e.to_json().dump(2) << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
