// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run through ctest or directly from the build tree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "tcell/bla.hpp"
#include "tcell/enumerate.hpp"
#include "tcell/mon_basic.hpp"
#include "tcell/registry.hpp"
#include "tcell/semibim.hpp"
#include "tcell/verify.hpp"

using namespace tcell;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
  int failures = 0;

  void run(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    std::string note;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), secs, note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
  }
};

ElementMap map_of(const FinMonoid* A, const FinMonoid* B, std::vector<int> img) {
  ElementMap m;
  m.src = A;
  m.tgt = B;
  m.images = std::move(img);
  return m;
}

Semibimodule bool_and_fixture(Registry& reg) {
  const FinMonoid* m = reg.get("bool-and");
  std::vector<int> act(8);
  for (int u = 0; u < 2; ++u)
    for (int a = 0; a < 2; ++a)
      for (int v = 0; v < 2; ++v) act[(u * 2 + a) * 2 + v] = (u * a * v) % 2;
  return validate_semibimodule(m, reg.get("Z2"), act);
}

Semibimodule trivial_action_fixture(Registry& reg) {
  const FinMonoid* m = reg.get("Z2");
  std::vector<int> act(8);
  for (int u = 0; u < 2; ++u)
    for (int a = 0; a < 2; ++a)
      for (int v = 0; v < 2; ++v) act[(u * 2 + a) * 2 + v] = a;
  return validate_semibimodule(m, m, act);
}

}  // namespace

int main() {
  Registry reg;
  Harness h;
  const FinMonoid* trivial = reg.get("trivial");
  const FinMonoid* chain2 = reg.get("chain2");
  const FinMonoid* chain3 = reg.get("chain3");
  const FinMonoid* z2 = reg.get("Z2");
  const FinMonoid* z3 = reg.get("Z3");
  const FinMonoid* z4 = reg.get("Z4");
  const FinMonoid* s3 = reg.get("S3");

  // 1. The non-monotone pair on the three-element chain is not horizontally
  //    composable; the two candidate middles are (0,2,1) and (0,2,2).
  h.run(1, "counterexample reproduction on chain3", [&](std::string& note) {
    const auto t0 = Clock::now();
    MonBasicStructure basic;
    Cell x = mon_cell(map_of(chain3, chain3, {0, 2, 1}), identity_hom(chain3));
    auto out = hcompose(basic, x, x);
    bool ok = !out.composable && out.lhs.mid.images == std::vector<int>{0, 2, 1} &&
              out.rhs.mid.images == std::vector<int>{0, 2, 2};

    // the same pair through the catalog realization
    auto case3 = make_structure("case3", {chain3});
    Cell cx;
    cx.dom = identity_hom(chain3);
    cx.mid = map_of(chain3, chain3, {0, 2, 1});
    cx.cod = require_hom(map_of(chain3, chain3, {0, 2, 2}));
    bool found = false;
    for (const Cell& c : case3->cells(chain3, chain3)) found |= (c == cx);
    Context ctx({chain3});
    auto out3 = hcompose(MonModel(*case3, ctx), cx, cx);
    ok = ok && found && !out3.composable &&
         out3.lhs.mid.images == std::vector<int>{0, 2, 1} &&
         out3.rhs.mid.images == std::vector<int>{0, 2, 2};

    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= 1.0) {
      note = "exceeded 1s budget";
      return false;
    }
    return ok;
  });

  // 2. Axiom verifier accepts every shipped structure on the fixture
  //    contexts. The S3 group variants have ~4.7M cells per pair, beyond
  //    cell-level enumeration; they go through the element-level condition
  //    checker, which decides the same laws for full families and is
  //    cross-validated against the generic verifier on Z2/Z3.
  h.run(2, "axiom suite over fixture contexts", [&](std::string& note) {
    const auto t0 = Clock::now();
    std::vector<Context> contexts;
    contexts.emplace_back(std::vector<const FinMonoid*>{trivial});
    contexts.emplace_back(std::vector<const FinMonoid*>{chain2});
    contexts.emplace_back(std::vector<const FinMonoid*>{chain3});
    contexts.emplace_back(std::vector<const FinMonoid*>{z2, z3});

    bool ok = true;
    MonBasicStructure basic;
    for (const Context& ctx : contexts) {
      if (!verify_structure_axioms(basic, ctx).ok()) {
        ok = false;
        note += "mon-basic;";
      }
      for (const char* id : {"case1", "case2", "case3", "case4", "case5", "case6", "case7"}) {
        auto s = make_structure(id, ctx.objects());
        if (!verify_structure_axioms(*s, ctx).ok()) {
          ok = false;
          note += std::string(id) + ";";
        }
      }
    }

    for (const char* id : {"maltsev", "inverse"}) {
      for (const FinMonoid* g : {z2, z3}) {
        Context ctx({g});
        auto s = make_structure(id, {g});
        const auto& bs = dynamic_cast<const BlaCellStructure&>(*s);
        bool generic = verify_structure_axioms(*s, ctx).ok();
        bool element =
            check_six_conditions(bs, ctx, SixConditionMode::Element).ok();
        if (!generic || !element) {
          ok = false;
          note += std::string(id) + "/" + g->name + ";";
        }
      }
      Context both({z2, z3});
      auto s = make_structure(id, {z2, z3});
      if (!verify_structure_axioms(*s, both).ok()) {
        ok = false;
        note += std::string(id) + "/Z2Z3;";
      }
      // S3: element-level six conditions; the full-family cell space is far
      // beyond enumeration and the element check decides the same laws.
      Context s3ctx({s3});
      auto s3s = make_structure(id, {s3});
      if (!check_six_conditions(dynamic_cast<const BlaCellStructure&>(*s3s), s3ctx,
                                SixConditionMode::Element)
               .ok()) {
        ok = false;
        note += std::string(id) + "/S3;";
      }
    }

    for (Semibimodule sb : {bool_and_fixture(reg), trivial_action_fixture(reg)}) {
      EmbeddedStructure emb(&sb);
      if (!verify_structure_axioms(OneObjectModel(emb)).ok()) {
        ok = false;
        note += "embed;";
      }
    }

    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= 60.0) {
      note += "exceeded 60s budget";
      return false;
    }
    return ok;
  });

  // 3. |case5 cells| = |hom| and |case4 cells| = |hom|^2 on every fixture pair.
  h.run(3, "discrete and co-discrete counts", [&](std::string& note) {
    const std::vector<const FinMonoid*> objs = {trivial, chain2, chain3, z2, z3, z4, s3};
    auto case4 = make_structure("case4", objs);
    auto case5 = make_structure("case5", objs);
    Context ctx(objs);
    bool ok = true;
    for (const FinMonoid* A : objs)
      for (const FinMonoid* B : objs) {
        const long long homs = static_cast<long long>(ctx.homs(A, B).size());
        if (count_cells(*case5, A, B) != homs || count_cells(*case4, A, B) != homs * homs) {
          ok = false;
          note += A->name + "->" + B->name + ";";
        }
      }
    return ok;
  });

  // 4. Membership and the crossed-homomorphism identity agree for every
  //    (t,f) into Z4 and into S3.
  h.run(4, "crossed homomorphism equivalence", [&](std::string& note) {
    bool ok = true;
    auto sweep = [&](const FinMonoid* A, const FinMonoid* B) {
      for (const Hom& f : enumerate_homs(A, B))
        for (const auto& img : tsupport::all_maps(*A, *B))
          if (!crossed_hom_equiv(map_of(A, B, img), f)) {
            ok = false;
            note += A->name + "->" + B->name + ";";
            return;
          }
    };
    for (const FinMonoid* A : {z2, z4}) sweep(A, z4);
    for (const FinMonoid* A : {z2, z3, s3}) sweep(A, s3);
    return ok;
  });

  // 5. Group targets admit right cancellation: every chained pair composes
  //    and no interchange counterexample exists on Z2, Z3, S3.
  h.run(5, "right cancellation on group contexts", [&](std::string& note) {
    MonBasicStructure basic;
    bool ok = true;
    for (const FinMonoid* g : {z2, z3, s3}) {
      Context ctx({g});
      MonModel model(basic, ctx);
      auto cells = basic.cells(g, g);
      for (const Cell& x : cells)
        for (const Cell& y : cells)
          if (!is_natural_wrt(model, x, y)) {
            ok = false;
            note += g->name + ";";
          }
      if (find_interchange_counterexample(basic, ctx).has_value()) {
        ok = false;
        note += g->name + ":witness;";
      }
    }
    Context mixed({z2, z3});
    if (find_interchange_counterexample(basic, mixed).has_value()) {
      ok = false;
      note += "Z2Z3:witness;";
    }
    return ok;
  });

  // 6. The identification of the catalog case3 family with the independent
  //    basic implementation commutes with every structure operation.
  h.run(6, "case3 equivalence with the basic structure", [&](std::string&) {
    Context ctx({chain3, z2, z3});
    return equiv_case3_moncell(ctx).ok();
  });

  // 7. Recovery round trip and naturality truth tables on both fixtures.
  h.run(7, "one-object recovery round trip", [&](std::string& note) {
    bool ok = true;
    for (Semibimodule sb : {bool_and_fixture(reg), trivial_action_fixture(reg)}) {
      EmbeddedStructure emb(&sb);
      auto res = recover(canonical_splitting(emb));
      if (!res.ok() || !res.value) {
        ok = false;
        note += "recover;";
        continue;
      }
      const auto& gen = *res.value;
      for (int u = 0; u < sb.M->size; ++u)
        for (size_t a = 0; a < gen.carrier.size(); ++a)
          for (int v = 0; v < sb.M->size; ++v)
            if (gen.carrier[gen.mu_at(u, static_cast<int>(a), v)].a !=
                sb.act_at(u, gen.carrier[a].a, v)) {
              ok = false;
              note += "mu;";
            }
      OneObjectModel model(emb);
      for (const auto& x : emb.cells())
        for (const auto& y : emb.cells())
          if (sb_natural_wrt(sb, x, y) != is_natural_wrt(model, x, y)) {
            ok = false;
            note += "naturality;";
          }
    }
    return ok;
  });

  // 8. The condition checker separates the middle-projection candidate from
  //    the lawful catalog: cond5 fails with a t != f witness while
  //    conditions 1-4 stay clean (the sum of this candidate is also
  //    non-associative, so cond6 reports as well); catalog cases pass all six.
  h.run(8, "condition checker discriminates", [&](std::string& note) {
    bool ok = true;
    auto pi2 = make_structure("pi2-full", {chain2});
    Context ctx({chain2});
    auto rep = check_six_conditions(dynamic_cast<const BlaCellStructure&>(*pi2), ctx);
    std::set<std::string> ids;
    for (const auto& v : rep.violations) ids.insert(v.axiom);
    if (rep.ok() || ids.count("cond5") == 0) {
      ok = false;
      note += "cond5-missing;";
    }
    for (const char* clean : {"cond1", "cond2", "cond3", "cond4"})
      if (ids.count(clean)) {
        ok = false;
        note += std::string(clean) + "-dirty;";
      }
    bool witness_t_neq_f = false;
    for (const auto& v : rep.violations)
      if (v.axiom == "cond5" && v.witness.contains("x"))
        witness_t_neq_f |= (v.witness.at("x").at("t") != v.witness.at("x").at("dom"));
    if (!witness_t_neq_f) {
      ok = false;
      note += "witness;";
    }
    if (ids.count("cond6")) note += "cond6 also fails (observed);";

    for (const char* id : {"case1", "case2", "case3", "case4", "case5", "case6", "case7"}) {
      auto s = make_structure(id, {chain2});
      if (!check_six_conditions(dynamic_cast<const BlaCellStructure&>(*s), ctx).ok()) {
        ok = false;
        note += std::string(id) + ";";
      }
    }
    for (const char* id : {"maltsev", "inverse"}) {
      auto s = make_structure(id, {z2});
      Context gctx({z2});
      if (!check_six_conditions(dynamic_cast<const BlaCellStructure&>(*s), gctx).ok()) {
        ok = false;
        note += std::string(id) + ";";
      }
    }
    return ok;
  });

  // 9. Enumeration: hand-derivable count on the trivial carrier, pinned
  //    constants on the two-element carriers, stability across repeats and
  //    partitionings.
  h.run(9, "enumeration determinism and pinned counts", [&](std::string& note) {
    const auto t0 = Clock::now();
    bool ok = true;
    if (enum_bla(trivial).size() != 1) {
      ok = false;
      note += "trivial;";
    }
    auto pinned = load_pinned_counts();
    if (!pinned.contains("enum_bla")) {
      note += "missing pinned counts;";
      return false;
    }
    for (const FinMonoid* b : {chain2, z2}) {
      auto base = enum_bla(b);
      if (base.size() != pinned["enum_bla"][b->name].get<size_t>()) {
        ok = false;
        note += b->name + ":count;";
      }
      for (int shards : {2, 4}) {
        EnumOptions eo;
        eo.shards = shards;
        auto parts = enum_bla(b, eo);
        bool same = parts.size() == base.size();
        for (size_t i = 0; same && i < base.size(); ++i)
          same = parts[i].in_R == base[i].in_R && parts[i].m == base[i].m &&
                 parts[i].e == base[i].e;
        if (!same) {
          ok = false;
          note += b->name + ":shards" + std::to_string(shards) + ";";
        }
      }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= 30.0) {
      note += "exceeded 30s budget";
      return false;
    }
    return ok;
  });

  // 10. Single-law corruptions are detected and the report names the
  //     corrupted axiom.
  h.run(10, "mutation sensitivity", [&](std::string& note) {
    Context ctx({chain3});
    bool ok = true;
    auto names = [](const ViolationReport& rep, const char* id) {
      return !rep.ok() && rep.names_axiom(id);
    };
    tsupport::CorruptVcompose cv;
    if (!names(verify_structure_axioms(cv, ctx, 50000), "add-unit-left")) {
      ok = false;
      note += "vcompose;";
    }
    tsupport::CorruptWhisker cw = tsupport::make_chain3_whisker_corruption(chain3);
    if (!names(verify_structure_axioms(cw, ctx, 50000), "mu-mu")) {
      ok = false;
      note += "whisker;";
    }
    tsupport::CorruptZero cz;
    if (!names(verify_structure_axioms(cz, ctx, 50000), "zero-cod")) {
      ok = false;
      note += "zero;";
    }
    return ok;
  });

  if (h.failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", h.failures);
  return 1;
}
