#include "tcell/verify.hpp"

#include <algorithm>

namespace tcell {

ViolationReport verify_structure_axioms(const CellStructure& s, const Context& ctx,
                                        long long cap) {
  return verify_structure_axioms(MonModel(s, ctx), cap);
}

bool is_natural_wrt(const CellStructure& s, const Cell& x, const Cell& y) {
  Context ctx({x.src(), x.tgt(), y.src()});
  return is_natural_wrt(MonModel(s, ctx), x, y);
}

bool is_natural(const CellStructure& s, const Cell& x, const Context& ctx) {
  MonModel m(s, ctx);
  return is_natural(m, x, ctx.index_of(x.src()));
}

HcomposeOutcome<MonModel> hcompose(const CellStructure& s, const Cell& x, const Cell& y) {
  Context ctx({x.src(), x.tgt(), y.src()});
  return hcompose(MonModel(s, ctx), x, y);
}

std::optional<InterchangeWitness<MonModel>> find_interchange_counterexample(
    const CellStructure& s, const Context& ctx) {
  return find_interchange_counterexample(MonModel(s, ctx));
}

ViolationReport verify_cell_morphism(const CellMorphism& mor, const Context& ctx,
                                     long long cap) {
  ViolationReport rep;
  rep.cap = cap;
  const CellStructure& S = *mor.from;
  const CellStructure& T = *mor.to;
  const auto& tau = mor.component;
  const size_t n = ctx.size();

  std::vector<std::vector<std::vector<Cell>>> scells(n), tcells(n);
  std::vector<std::vector<std::vector<std::string>>> tkeys(n);
  for (size_t a = 0; a < n; ++a) {
    scells[a].resize(n);
    tcells[a].resize(n);
    tkeys[a].resize(n);
    for (size_t b = 0; b < n; ++b) {
      scells[a][b] = S.cells(ctx.object(a), ctx.object(b));
      tcells[a][b] = T.cells(ctx.object(a), ctx.object(b));
      for (const Cell& c : tcells[a][b]) tkeys[a][b].push_back(cell_to_string(c));
      std::sort(tkeys[a][b].begin(), tkeys[a][b].end());
    }
  }
  auto in_target = [&](size_t a, size_t b, const Cell& c) {
    return std::binary_search(tkeys[a][b].begin(), tkeys[a][b].end(), cell_to_string(c));
  };
  // A throwing operation while an equation is evaluated counts against that
  // equation (a bad component map can make composites undefined).
  auto guarded = [&rep](const char* axiom, nlohmann::ordered_json witness, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      rep.record({axiom, std::move(witness), e.to_json(), nullptr});
    }
  };

  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      const FinMonoid* A = ctx.object(a);
      const FinMonoid* B = ctx.object(b);
      auto pair_witness = [&](const Cell& x) {
        nlohmann::ordered_json w;
        w["A"] = A->name;
        w["B"] = B->name;
        w["x"] = cell_to_json(x);
        return w;
      };

      for (const Cell& x : scells[a][b]) {
        ++rep.checks;
        guarded("tau-into", pair_witness(x), [&] {
          Cell tx = tau(x);
          if (!in_target(a, b, tx))
            rep.record({"tau-into", pair_witness(x), cell_to_json(tx), nullptr});
          if (tx.dom != x.dom)
            rep.record({"tau-dom", pair_witness(x),
                        nlohmann::ordered_json{{"hom", tx.dom.images}},
                        nlohmann::ordered_json{{"hom", x.dom.images}}});
          if (tx.cod != x.cod)
            rep.record({"tau-cod", pair_witness(x),
                        nlohmann::ordered_json{{"hom", tx.cod.images}},
                        nlohmann::ordered_json{{"hom", x.cod.images}}});
        });
      }

      for (const Hom& f : ctx.homs(a, b)) {
        ++rep.checks;
        Cell lhs = tau(S.zero(f));
        Cell rhs = T.zero(f);
        if (lhs != rhs) {
          nlohmann::ordered_json w;
          w["A"] = A->name;
          w["B"] = B->name;
          w["f"] = f.images;
          rep.record({"tau-zero", std::move(w), cell_to_json(lhs), cell_to_json(rhs)});
        }
      }

      for (const Cell& x2 : scells[a][b])
        for (const Cell& x1 : scells[a][b]) {
          if (x2.dom != x1.cod) continue;
          ++rep.checks;
          nlohmann::ordered_json w;
          w["A"] = A->name;
          w["B"] = B->name;
          w["left"] = cell_to_json(x2);
          w["right"] = cell_to_json(x1);
          guarded("tau-add", w, [&] {
            Cell lhs = tau(S.vcompose(x2, x1));
            Cell rhs = T.vcompose(tau(x2), tau(x1));
            if (lhs != rhs)
              rep.record({"tau-add", std::move(w), cell_to_json(lhs), cell_to_json(rhs)});
          });
        }

      for (size_t a2 = 0; a2 < n; ++a2)
        for (size_t b2 = 0; b2 < n; ++b2)
          for (const Hom& u : ctx.homs(b, b2))
            for (const Hom& v : ctx.homs(a2, a))
              for (const Cell& x : scells[a][b]) {
                ++rep.checks;
                auto w = pair_witness(x);
                w["u"] = u.images;
                w["v"] = v.images;
                guarded("tau-mu", w, [&] {
                  Cell lhs = tau(S.whisker(u, x, v));
                  Cell rhs = T.whisker(u, tau(x), v);
                  if (lhs != rhs)
                    rep.record({"tau-mu", std::move(w), cell_to_json(lhs), cell_to_json(rhs)});
                });
              }
    }
  return rep;
}

}  // namespace tcell
