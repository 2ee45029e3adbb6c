#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tcell/context.hpp"
#include "tcell/error.hpp"
#include "tcell/report.hpp"
#include "tcell/structure.hpp"

namespace tcell {

// The verification algorithms are written once against a small model
// interface so that structures over monoid contexts and one-object
// structures share them. A model provides:
//   Mor, CellT                      value types with ==
//   object_count(), object_name(i)
//   homs(a,b) -> const vector<Mor>&
//   compose(g,f), identity(i)
//   cells(a,b) -> vector<CellT>
//   dom(x), cod(x) -> Mor
//   zero(f), vcompose(x2,x1), whisker(u,x,v)
//   chainable(x,y), id_src(x), id_tgt(x)
//   mor_json(u), cell_json(x)

/// Adapter for a CellStructure over a monoid Context.
class MonModel {
 public:
  using Mor = Hom;
  using CellT = Cell;

  MonModel(const CellStructure& s, const Context& ctx) : s_(&s), ctx_(&ctx) {}

  size_t object_count() const { return ctx_->size(); }
  std::string object_name(size_t i) const { return ctx_->object(i)->name; }
  const std::vector<Hom>& homs(size_t a, size_t b) const { return ctx_->homs(a, b); }
  Hom compose(const Hom& g, const Hom& f) const { return tcell::compose(g, f); }
  Hom identity(size_t a) const { return identity_hom(ctx_->object(a)); }
  std::vector<Cell> cells(size_t a, size_t b) const {
    return s_->cells(ctx_->object(a), ctx_->object(b));
  }
  const Hom& dom(const Cell& x) const { return x.dom; }
  const Hom& cod(const Cell& x) const { return x.cod; }
  Cell zero(const Hom& f) const { return s_->zero(f); }
  Cell vcompose(const Cell& x2, const Cell& x1) const { return s_->vcompose(x2, x1); }
  Cell whisker(const Hom& u, const Cell& x, const Hom& v) const {
    return s_->whisker(u, x, v);
  }
  bool chainable(const Cell& x, const Cell& y) const {
    return same_monoid(y.tgt(), x.src());
  }
  Hom id_src(const Cell& x) const { return identity_hom(x.src()); }
  Hom id_tgt(const Cell& x) const { return identity_hom(x.tgt()); }
  nlohmann::ordered_json mor_json(const Hom& u) const {
    return nlohmann::ordered_json{{"hom", u.images}};
  }
  nlohmann::ordered_json cell_json(const Cell& x) const { return cell_to_json(x); }

  const Context& context() const { return *ctx_; }

 private:
  const CellStructure* s_;
  const Context* ctx_;
};

template <typename Model>
struct HcomposeOutcome {
  bool composable = false;
  typename Model::CellT lhs;  // x cod(y) + dom(x) y
  typename Model::CellT rhs;  // cod(x) y + x dom(y)
  const typename Model::CellT& composite() const { return lhs; }
};

template <typename Model>
struct InterchangeWitness {
  typename Model::CellT x, y;
  typename Model::CellT lhs, rhs;  // the two disagreeing candidate composites
};

namespace detail {

template <typename Model>
void require_chained_cells(const Model& m, const typename Model::CellT& x,
                           const typename Model::CellT& y) {
  if (!m.chainable(x, y))
    throw Error("not-chained", "cells are not composable end to end",
                {{"x", m.cell_json(x)}, {"y", m.cell_json(y)}});
}

}  // namespace detail

/// Both candidate horizontal composites of a chained pair. The pair is
/// composable exactly when the candidates coincide.
template <typename Model>
HcomposeOutcome<Model> hcompose(const Model& m, const typename Model::CellT& x,
                                const typename Model::CellT& y) {
  detail::require_chained_cells(m, x, y);
  const auto id_y_src = m.id_src(y);
  const auto id_x_tgt = m.id_tgt(x);
  HcomposeOutcome<Model> out;
  out.lhs = m.vcompose(m.whisker(id_x_tgt, x, m.cod(y)), m.whisker(m.dom(x), y, id_y_src));
  out.rhs = m.vcompose(m.whisker(m.cod(x), y, id_y_src), m.whisker(id_x_tgt, x, m.dom(y)));
  out.composable = (out.lhs == out.rhs);
  return out;
}

/// x is natural with respect to y when the two candidate composites agree:
/// cod(x)y + x dom(y) = x cod(y) + dom(x)y.
template <typename Model>
bool is_natural_wrt(const Model& m, const typename Model::CellT& x,
                    const typename Model::CellT& y) {
  return hcompose(m, x, y).composable;
}

/// Natural against every incoming cell from every object of the context.
template <typename Model>
bool is_natural(const Model& m, const typename Model::CellT& x, size_t src_index) {
  for (size_t xo = 0; xo < m.object_count(); ++xo)
    for (const auto& y : m.cells(xo, src_index))
      if (!is_natural_wrt(m, x, y)) return false;
  return true;
}

/// First chained pair (x, y) whose candidate composites disagree, scanning
/// objects in context order and cells in enumeration order:
/// A (middle), B (target of x), X (source of y), then x, then y.
template <typename Model>
std::optional<InterchangeWitness<Model>> find_interchange_counterexample(const Model& m) {
  const size_t n = m.object_count();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      const auto xs = m.cells(a, b);
      if (xs.empty()) continue;
      for (size_t xo = 0; xo < n; ++xo) {
        const auto ys = m.cells(xo, a);
        for (const auto& x : xs)
          for (const auto& y : ys) {
            auto out = hcompose(m, x, y);
            if (!out.composable)
              return InterchangeWitness<Model>{x, y, std::move(out.lhs), std::move(out.rhs)};
          }
      }
    }
  return std::nullopt;
}

/// Exhaustive check of the structure axioms over the whole context.
///
/// Axiom ids: mu-dom, mu-cod, mu-zero, mu-add, mu-mu, mu-unit, zero-dom,
/// zero-cod, add-dom, add-cod, add-unit-left, add-unit-right, add-assoc,
/// plus the typing closures mu-closure, add-closure, zero-closure (the
/// operations must land back in the enumerated cell sets) and cell-typing
/// (enumerated cells must have doms and cods from the hom set).
template <typename Model>
ViolationReport verify_structure_axioms(const Model& m, long long cap = -1) {
  ViolationReport rep;
  rep.cap = cap;
  const size_t n = m.object_count();
  using CellT = typename Model::CellT;
  using Mor = typename Model::Mor;

  // Per-pair caches.
  struct PairData {
    std::vector<CellT> cells;
    std::unordered_set<std::string> keys;
    std::vector<int> dom_id, cod_id;              // indices into homs(a,b)
    std::vector<std::vector<int>> by_dom, by_cod; // hom id -> cell indices
  };
  std::vector<std::vector<PairData>> pd(n, std::vector<PairData>(n));

  auto key_of = [&](const CellT& c) { return m.cell_json(c).dump(); };

  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      PairData& d = pd[a][b];
      d.cells = m.cells(a, b);
      const auto& homs = m.homs(a, b);
      d.by_dom.assign(homs.size(), {});
      d.by_cod.assign(homs.size(), {});
      auto hom_id = [&](const Mor& h) {
        for (size_t i = 0; i < homs.size(); ++i)
          if (homs[i] == h) return static_cast<int>(i);
        return -1;
      };
      for (size_t i = 0; i < d.cells.size(); ++i) {
        d.keys.insert(key_of(d.cells[i]));
        const int di = hom_id(m.dom(d.cells[i]));
        const int ci = hom_id(m.cod(d.cells[i]));
        d.dom_id.push_back(di);
        d.cod_id.push_back(ci);
        if (di >= 0) d.by_dom[di].push_back(static_cast<int>(i));
        if (ci >= 0) d.by_cod[ci].push_back(static_cast<int>(i));
        // dom/cod outside hom(A,B) would be a typing fault; surface it.
        if (di < 0 || ci < 0)
          rep.record({"cell-typing", {{"A", m.object_name(a)}, {"B", m.object_name(b)}},
                      m.cell_json(d.cells[i]), nullptr});
      }
    }

  auto objs_witness = [&](size_t a, size_t b) {
    return nlohmann::ordered_json{{"A", m.object_name(a)}, {"B", m.object_name(b)}};
  };
  // An operation that throws while a law is being evaluated counts as a
  // violation of that law (a corrupted structure may return ill-typed cells
  // that make a later operation refuse its input).
  auto guarded = [&rep](const char* axiom, nlohmann::ordered_json witness, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      rep.record({axiom, std::move(witness), e.to_json(), nullptr});
    }
  };

  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      const PairData& d = pd[a][b];
      const auto& homs = m.homs(a, b);

      // zero: dom/cod laws and closure.
      for (const Mor& f : homs) {
        ++rep.checks;
        guarded("zero-closure", objs_witness(a, b), [&] {
          CellT z = m.zero(f);
          if (!(m.dom(z) == f)) {
            auto w = objs_witness(a, b);
            w["f"] = m.mor_json(f);
            rep.record({"zero-dom", std::move(w), m.mor_json(m.dom(z)), m.mor_json(f)});
          }
          if (!(m.cod(z) == f)) {
            auto w = objs_witness(a, b);
            w["f"] = m.mor_json(f);
            rep.record({"zero-cod", std::move(w), m.mor_json(m.cod(z)), m.mor_json(f)});
          }
          if (!d.keys.count(key_of(z))) {
            auto w = objs_witness(a, b);
            w["f"] = m.mor_json(f);
            rep.record({"zero-closure", std::move(w), m.cell_json(z), nullptr});
          }
        });
      }

      // mu-unit and the vertical unit laws.
      const Mor id_a = m.identity(a);
      const Mor id_b = m.identity(b);
      for (const CellT& x : d.cells) {
        ++rep.checks;
        guarded("mu-unit", objs_witness(a, b), [&] {
          CellT w = m.whisker(id_b, x, id_a);
          if (!(w == x))
            rep.record({"mu-unit", objs_witness(a, b), m.cell_json(w), m.cell_json(x)});
        });
        guarded("add-unit-left", objs_witness(a, b), [&] {
          CellT lu = m.vcompose(m.zero(m.cod(x)), x);
          if (!(lu == x))
            rep.record({"add-unit-left", objs_witness(a, b), m.cell_json(lu), m.cell_json(x)});
        });
        guarded("add-unit-right", objs_witness(a, b), [&] {
          CellT ru = m.vcompose(x, m.zero(m.dom(x)));
          if (!(ru == x))
            rep.record({"add-unit-right", objs_witness(a, b), m.cell_json(ru), m.cell_json(x)});
        });
      }

      // Chained pairs: vertical sums, their laws, and a cache for reuse.
      struct ChainedPair {
        int i2, i1;
        CellT sum;
      };
      std::vector<ChainedPair> pairs;
      for (size_t g = 0; g < homs.size(); ++g)
        for (int i2 : d.by_dom[g])
          for (int i1 : d.by_cod[g]) {
            ++rep.checks;
            guarded("add-closure", objs_witness(a, b), [&] {
              CellT sum = m.vcompose(d.cells[i2], d.cells[i1]);
              if (!(m.dom(sum) == m.dom(d.cells[i1])))
                rep.record({"add-dom", objs_witness(a, b), m.mor_json(m.dom(sum)),
                            m.mor_json(m.dom(d.cells[i1]))});
              if (!(m.cod(sum) == m.cod(d.cells[i2])))
                rep.record({"add-cod", objs_witness(a, b), m.mor_json(m.cod(sum)),
                            m.mor_json(m.cod(d.cells[i2]))});
              if (!d.keys.count(key_of(sum))) {
                auto w = objs_witness(a, b);
                w["left"] = m.cell_json(d.cells[i2]);
                w["right"] = m.cell_json(d.cells[i1]);
                rep.record({"add-closure", std::move(w), m.cell_json(sum), nullptr});
              }
              pairs.push_back({i2, i1, std::move(sum)});
            });
          }

      // add-assoc: x2 ranges over middles; both bracketings must agree.
      for (size_t i2 = 0; i2 < d.cells.size(); ++i2) {
        const CellT& x2 = d.cells[i2];
        if (d.cod_id[i2] < 0 || d.dom_id[i2] < 0) continue;
        const auto& uppers = d.by_dom[d.cod_id[i2]];
        const auto& lowers = d.by_cod[d.dom_id[i2]];
        if (uppers.empty() || lowers.empty()) continue;
        guarded("add-assoc", objs_witness(a, b), [&] {
          std::vector<CellT> s32;
          s32.reserve(uppers.size());
          for (int i3 : uppers) s32.push_back(m.vcompose(d.cells[i3], x2));
          std::vector<CellT> s21;
          s21.reserve(lowers.size());
          for (int i1 : lowers) s21.push_back(m.vcompose(x2, d.cells[i1]));
          for (size_t ui = 0; ui < uppers.size(); ++ui)
            for (size_t li = 0; li < lowers.size(); ++li) {
              ++rep.checks;
              CellT lhs = m.vcompose(d.cells[uppers[ui]], s21[li]);
              CellT rhs = m.vcompose(s32[ui], d.cells[lowers[li]]);
              if (!(lhs == rhs)) {
                auto w = objs_witness(a, b);
                w["top"] = m.cell_json(d.cells[uppers[ui]]);
                w["middle"] = m.cell_json(x2);
                w["bottom"] = m.cell_json(d.cells[lowers[li]]);
                rep.record({"add-assoc", std::move(w), m.cell_json(lhs), m.cell_json(rhs)});
              }
            }
        });
      }

      // Whiskering against every hom pair into every object pair.
      for (size_t a2 = 0; a2 < n; ++a2)
        for (size_t b2 = 0; b2 < n; ++b2) {
          const auto& us = m.homs(b, b2);
          const auto& vs = m.homs(a2, a);
          if (us.empty() || vs.empty()) continue;
          for (const Mor& u : us)
            for (const Mor& v : vs) {
              auto uv_witness = [&](const CellT& x) {
                auto w = objs_witness(a, b);
                w["A'"] = m.object_name(a2);
                w["B'"] = m.object_name(b2);
                w["u"] = m.mor_json(u);
                w["v"] = m.mor_json(v);
                w["x"] = m.cell_json(x);
                return w;
              };

              std::vector<CellT> whisked;
              whisked.reserve(d.cells.size());
              for (size_t i = 0; i < d.cells.size(); ++i) {
                const CellT& x = d.cells[i];
                ++rep.checks;
                guarded("mu-closure", uv_witness(x), [&] {
                  CellT w = m.whisker(u, x, v);
                  const Mor expect_dom = m.compose(m.compose(u, m.dom(x)), v);
                  const Mor expect_cod = m.compose(m.compose(u, m.cod(x)), v);
                  if (!(m.dom(w) == expect_dom))
                    rep.record({"mu-dom", uv_witness(x), m.mor_json(m.dom(w)),
                                m.mor_json(expect_dom)});
                  if (!(m.cod(w) == expect_cod))
                    rep.record({"mu-cod", uv_witness(x), m.mor_json(m.cod(w)),
                                m.mor_json(expect_cod)});
                  if (!pd[a2][b2].keys.count(key_of(w)))
                    rep.record({"mu-closure", uv_witness(x), m.cell_json(w), nullptr});
                  whisked.push_back(std::move(w));
                });
                if (whisked.size() == i) whisked.push_back(x);  // keep indices aligned
              }

              // mu-zero.
              for (const Mor& f : homs) {
                ++rep.checks;
                auto w0 = objs_witness(a, b);
                w0["u"] = m.mor_json(u);
                w0["v"] = m.mor_json(v);
                w0["f"] = m.mor_json(f);
                guarded("mu-zero", w0, [&] {
                  CellT wz = m.whisker(u, m.zero(f), v);
                  CellT zw = m.zero(m.compose(m.compose(u, f), v));
                  if (!(wz == zw))
                    rep.record({"mu-zero", std::move(w0), m.cell_json(wz), m.cell_json(zw)});
                });
              }

              // mu-add: whiskering is additive.
              for (const ChainedPair& p : pairs) {
                ++rep.checks;
                guarded("mu-add", objs_witness(a, b), [&] {
                  CellT lhs = m.vcompose(whisked[p.i2], whisked[p.i1]);
                  CellT rhs = m.whisker(u, p.sum, v);
                  if (!(lhs == rhs)) {
                    auto w = objs_witness(a, b);
                    w["u"] = m.mor_json(u);
                    w["v"] = m.mor_json(v);
                    w["left"] = m.cell_json(d.cells[p.i2]);
                    w["right"] = m.cell_json(d.cells[p.i1]);
                    rep.record({"mu-add", std::move(w), m.cell_json(lhs), m.cell_json(rhs)});
                  }
                });
              }

              // mu-mu: functoriality of whiskering.
              for (size_t a3 = 0; a3 < n; ++a3)
                for (size_t b3 = 0; b3 < n; ++b3) {
                  const auto& u2s = m.homs(b2, b3);
                  const auto& v2s = m.homs(a3, a2);
                  for (const Mor& u2 : u2s)
                    for (const Mor& v2 : v2s) {
                      const Mor uu = m.compose(u2, u);
                      const Mor vv = m.compose(v, v2);
                      for (size_t i = 0; i < d.cells.size(); ++i) {
                        ++rep.checks;
                        guarded("mu-mu", uv_witness(d.cells[i]), [&] {
                          CellT lhs = m.whisker(u2, whisked[i], v2);
                          CellT rhs = m.whisker(uu, d.cells[i], vv);
                          if (!(lhs == rhs)) {
                            auto w = uv_witness(d.cells[i]);
                            w["u'"] = m.mor_json(u2);
                            w["v'"] = m.mor_json(v2);
                            rep.record(
                                {"mu-mu", std::move(w), m.cell_json(lhs), m.cell_json(rhs)});
                          }
                        });
                      }
                    }
                }
            }
        }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Monoid-context conveniences.

ViolationReport verify_structure_axioms(const CellStructure& s, const Context& ctx,
                                        long long cap = -1);
bool is_natural_wrt(const CellStructure& s, const Cell& x, const Cell& y);
bool is_natural(const CellStructure& s, const Cell& x, const Context& ctx);
HcomposeOutcome<MonModel> hcompose(const CellStructure& s, const Cell& x, const Cell& y);
std::optional<InterchangeWitness<MonModel>> find_interchange_counterexample(
    const CellStructure& s, const Context& ctx);

/// A morphism of structures over one context: a component map applied to
/// cells of `from`, expected to land in `to`.
struct CellMorphism {
  const CellStructure* from = nullptr;
  const CellStructure* to = nullptr;
  std::function<Cell(const Cell&)> component;
};

/// Checks the morphism equations exhaustively. Axiom ids: tau-into,
/// tau-dom, tau-cod, tau-zero, tau-add, tau-mu.
ViolationReport verify_cell_morphism(const CellMorphism& mor, const Context& ctx,
                                     long long cap = -1);

}  // namespace tcell
