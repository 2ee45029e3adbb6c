#include "tcell/bla.hpp"

#include <algorithm>

#include "tcell/error.hpp"

namespace tcell {

bool BlaStructure::r_full() const {
  return std::all_of(in_R.begin(), in_R.end(), [](char c) { return c != 0; });
}

std::vector<std::array<int, 3>> BlaStructure::r_triples() const {
  std::vector<std::array<int, 3>> out;
  for (int b1 = 0; b1 < n(); ++b1)
    for (int b2 = 0; b2 < n(); ++b2)
      for (int b3 = 0; b3 < n(); ++b3)
        if (contains(b1, b2, b3)) out.push_back({b1, b2, b3});
  return out;
}

BlaStructure validate_bla(const FinMonoid* B,
                          const std::vector<std::array<int, 3>>& r_triples,
                          const std::vector<std::array<int, 4>>& m_entries,
                          const std::vector<int>& e) {
  const int n = B->size;
  BlaStructure bla;
  bla.B = B;
  bla.in_R.assign(static_cast<size_t>(n) * n * n, 0);
  bla.m.assign(static_cast<size_t>(n) * n * n, -1);

  auto in_range = [n](int b) { return b >= 0 && b < n; };
  for (const auto& t : r_triples) {
    if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2]))
      throw Error("out-of-range", "R triple out of range", {{"triple", t}});
    bla.in_R[bla.idx(t[0], t[1], t[2])] = 1;
  }
  for (const auto& entry : m_entries) {
    if (!in_range(entry[0]) || !in_range(entry[1]) || !in_range(entry[2]) || !in_range(entry[3]))
      throw Error("out-of-range", "m entry out of range", {{"entry", entry}});
    if (!bla.contains(entry[0], entry[1], entry[2]))
      throw Error("format", "m keyed outside R",
                  {{"triple", {entry[0], entry[1], entry[2]}}});
    bla.m[bla.idx(entry[0], entry[1], entry[2])] = entry[3];
  }
  for (const auto& t : r_triples)
    if (bla.m_at(t[0], t[1], t[2]) < 0)
      throw Error("format", "m is not total on R", {{"triple", t}});
  if (static_cast<int>(e.size()) != n) throw Error("format", "e has wrong length");
  for (int b = 0; b < n; ++b)
    if (!in_range(e[b])) throw Error("out-of-range", "e value out of range", {{"b", b}});
  bla.e = e;

  // Condition (2): (e(b), b, e(b)) in R.
  for (int b = 0; b < n; ++b)
    if (!bla.contains(e[b], b, e[b]))
      throw Error("bla-cond2", "(e(b), b, e(b)) escapes R", {{"b", b}});
  // Condition (1): (b1,b2,e(b2)) in R and (e(b2),b2,b3) in R force
  // (b1,b2,b3) in R.
  for (int b1 = 0; b1 < n; ++b1)
    for (int b2 = 0; b2 < n; ++b2)
      for (int b3 = 0; b3 < n; ++b3)
        if (bla.contains(b1, b2, e[b2]) && bla.contains(e[b2], b2, b3) &&
            !bla.contains(b1, b2, b3))
          throw Error("bla-cond1", "R is not closed under the inference rule",
                      {{"b1", b1}, {"b2", b2}, {"b3", b3}});
  return bla;
}

BlaStructure make_bla(BlaKind kind, const FinMonoid* B) {
  const int n = B->size;
  if ((kind == BlaKind::Maltsev || kind == BlaKind::Inverse) && !B->is_group)
    throw Error("not-a-group", "this parameterization needs a group", {{"name", B->name}});

  std::vector<std::array<int, 3>> r;
  std::vector<std::array<int, 4>> m;
  std::vector<int> e(n);
  auto full_r = [&] {
    for (int b1 = 0; b1 < n; ++b1)
      for (int b2 = 0; b2 < n; ++b2)
        for (int b3 = 0; b3 < n; ++b3) r.push_back({b1, b2, b3});
  };
  switch (kind) {
    case BlaKind::MonDefault:
      full_r();
      for (const auto& t : r) m.push_back({t[0], t[1], t[2], B->op(t[0], t[2])});
      std::fill(e.begin(), e.end(), B->identity);
      break;
    case BlaKind::Maltsev:
      full_r();
      for (const auto& t : r)
        m.push_back({t[0], t[1], t[2], B->op(B->op(t[0], B->inv(t[1])), t[2])});
      for (int b = 0; b < n; ++b) e[b] = b;
      break;
    case BlaKind::Inverse:
      full_r();
      for (const auto& t : r)
        m.push_back({t[0], t[1], t[2], B->op(B->op(t[0], t[1]), t[2])});
      for (int b = 0; b < n; ++b) e[b] = B->inv(b);
      break;
    case BlaKind::Diagonal:
      for (int b = 0; b < n; ++b) {
        r.push_back({b, b, b});
        m.push_back({b, b, b, b});
        e[b] = b;
      }
      break;
    case BlaKind::Pi2:
      full_r();
      for (const auto& t : r) m.push_back({t[0], t[1], t[2], t[1]});
      for (int b = 0; b < n; ++b) e[b] = b;
      break;
  }
  return validate_bla(B, r, m, e);
}

BlaStructure bla_from_json(const nlohmann::json& j, Registry& reg) {
  if (!j.is_object() || !j.contains("monoid") || !j.contains("R") || !j.contains("m") ||
      !j.contains("e"))
    throw Error("format", "bla document needs monoid/R/m/e");
  const FinMonoid* B = reg.get(j.at("monoid").get<std::string>());
  std::vector<std::array<int, 3>> r;
  for (const auto& t : j.at("R")) {
    auto v = t.get<std::vector<int>>();
    if (v.size() != 3) throw Error("format", "R entries are triples");
    r.push_back({v[0], v[1], v[2]});
  }
  std::vector<std::array<int, 4>> m;
  for (const auto& entry : j.at("m")) {
    auto v = entry.get<std::vector<int>>();
    if (v.size() != 4) throw Error("format", "m entries are keyed values");
    m.push_back({v[0], v[1], v[2], v[3]});
  }
  return validate_bla(B, r, m, j.at("e").get<std::vector<int>>());
}

nlohmann::ordered_json bla_to_json(const BlaStructure& bla) {
  nlohmann::ordered_json j;
  j["monoid"] = bla.B->name;
  auto rj = nlohmann::ordered_json::array();
  auto mj = nlohmann::ordered_json::array();
  for (const auto& t : bla.r_triples()) {
    rj.push_back({t[0], t[1], t[2]});
    mj.push_back({t[0], t[1], t[2], bla.m_at(t[0], t[1], t[2])});
  }
  j["R"] = std::move(rj);
  j["m"] = std::move(mj);
  j["e"] = bla.e;
  return j;
}

std::vector<Cell> hr_cells(const BlaStructure& bla, const FinMonoid* A, const FinMonoid* B) {
  if (!same_monoid(bla.B, B))
    throw Error("endpoint-mismatch", "bla is assigned to a different object");
  const auto homs = enumerate_homs(A, B);
  std::vector<Cell> out;
  for (const Hom& f : homs) {
    ElementMap t;
    t.src = A;
    t.tgt = B;
    t.images.assign(A->size, 0);
    while (true) {
      bool member = true;
      for (int a = 0; a < A->size && member; ++a)
        member = bla.contains(t.images[a], f.images[a], bla.e[f.images[a]]);
      if (member) {
        for (const Hom& g : homs) {
          bool ok = true;
          for (int a = 0; a < A->size && ok; ++a)
            ok = bla.contains(bla.e[g.images[a]], g.images[a], t.images[a]);
          if (!ok) continue;
          Cell c;
          c.dom = f;
          c.mid = t;
          c.cod = g;
          out.push_back(std::move(c));
        }
      }
      int pos = A->size - 1;
      while (pos >= 0 && t.images[pos] == B->size - 1) t.images[pos--] = 0;
      if (pos < 0) break;
      ++t.images[pos];
    }
  }
  return out;
}

const BlaStructure& BlaCellStructure::bla_for(const FinMonoid* B) const {
  auto it = blas_.find(B);
  if (it != blas_.end()) return it->second;
  for (const auto& [obj, bla] : blas_)
    if (same_monoid(obj, B)) return bla;
  throw Error("unknown-monoid", "no bla assigned to object", {{"name", B ? B->name : "?"}});
}

std::vector<Cell> BlaCellStructure::cells(const FinMonoid* A, const FinMonoid* B) const {
  std::vector<Cell> all = hr_cells(bla_for(B), A, B);
  if (family_.full) return all;
  std::vector<Cell> out;
  for (auto& c : all)
    if (family_.member(c.dom, c.mid, c.cod)) out.push_back(std::move(c));
  return out;
}

Cell BlaCellStructure::zero(const Hom& f) const {
  const BlaStructure& bla = bla_for(f.tgt);
  Cell c;
  c.dom = f;
  c.cod = f;
  c.mid.src = f.src;
  c.mid.tgt = f.tgt;
  c.mid.images.resize(f.images.size());
  for (size_t a = 0; a < f.images.size(); ++a) c.mid.images[a] = bla.e[f.images[a]];
  return c;
}

Cell BlaCellStructure::vcompose(const Cell& x2, const Cell& x1) const {
  if (x2.dom != x1.cod)
    throw Error("not-chained", "vertical composition needs dom(left) = cod(right)",
                {{"left", cell_to_json(x2)}, {"right", cell_to_json(x1)}});
  const BlaStructure& bla = bla_for(x1.tgt());
  Cell r;
  r.dom = x1.dom;
  r.cod = x2.cod;
  r.mid.src = x1.mid.src;
  r.mid.tgt = x1.mid.tgt;
  r.mid.images.resize(x1.mid.images.size());
  for (size_t a = 0; a < x1.mid.images.size(); ++a) {
    const int t2 = x2.mid.images[a], g = x1.cod.images[a], t1 = x1.mid.images[a];
    if (!bla.contains(t2, g, t1))
      throw Error("invariant-broken", "sum triple escapes R; closure condition (1) fails",
                  {{"triple", {t2, g, t1}}});
    r.mid.images[a] = bla.m_at(t2, g, t1);
  }
  return r;
}

Cell BlaCellStructure::whisker(const Hom& u, const Cell& x, const Hom& v) const {
  if (!same_monoid(v.tgt, x.src()) || !same_monoid(u.src, x.tgt()))
    throw Error("not-chained", "whiskering endpoints do not match");
  Cell r;
  r.dom = compose(u, compose(x.dom, v));
  r.mid = compose(static_cast<const ElementMap&>(u), compose(x.mid, v));
  r.cod = compose(u, compose(x.cod, v));
  return r;
}

namespace {

bool images_constant(const ElementMap& t) {
  for (int v : t.images)
    if (v != t.images[0]) return false;
  return true;
}

bool images_zero(const ElementMap& t) {
  for (int v : t.images)
    if (v != t.tgt->identity) return false;
  return true;
}

}  // namespace

CatalogEntry catalog(const std::string& case_id) {
  CellFamily fam;
  fam.name = case_id;
  BlaKind kind = BlaKind::MonDefault;
  if (case_id == "case1" || case_id == "mon-default" || case_id == "maltsev" ||
      case_id == "inverse" || case_id == "pi2-full") {
    fam.full = true;
    fam.member = [](const Hom&, const ElementMap&, const Hom&) { return true; };
    if (case_id == "maltsev") kind = BlaKind::Maltsev;
    if (case_id == "inverse") kind = BlaKind::Inverse;
    if (case_id == "pi2-full") kind = BlaKind::Pi2;
  } else if (case_id == "case2") {
    fam.member = [](const Hom&, const ElementMap& t, const Hom&) { return images_constant(t); };
  } else if (case_id == "case3") {
    fam.member = [](const Hom& f, const ElementMap& t, const Hom& g) {
      return static_cast<const ElementMap&>(g) == add_pointwise(t, f);
    };
  } else if (case_id == "case4") {
    fam.member = [](const Hom&, const ElementMap& t, const Hom&) { return images_zero(t); };
  } else if (case_id == "case5") {
    fam.member = [](const Hom& f, const ElementMap& t, const Hom& g) {
      return images_zero(t) && g == f;
    };
  } else if (case_id == "case6") {
    fam.member = [](const Hom& f, const ElementMap& t, const Hom& g) {
      return add_pointwise(g, t) == add_pointwise(t, f);
    };
  } else if (case_id == "case7") {
    fam.member = [](const Hom& f, const ElementMap& t, const Hom& g) {
      return images_constant(t) && add_pointwise(g, t) == add_pointwise(t, f);
    };
  } else if (case_id == "diagonal") {
    fam.full = true;
    fam.member = [](const Hom&, const ElementMap&, const Hom&) { return true; };
    kind = BlaKind::Diagonal;
  } else {
    throw Error("unknown-case", "no catalog case named '" + case_id + "'",
                {{"case", case_id}});
  }
  return CatalogEntry{std::move(fam), kind};
}

std::unique_ptr<CellStructure> make_structure(const std::string& id,
                                              const std::vector<const FinMonoid*>& objects) {
  if (id == "mon-basic") return std::make_unique<MonBasicStructure>();
  CatalogEntry entry = catalog(id);
  std::map<const FinMonoid*, BlaStructure> blas;
  for (const FinMonoid* obj : objects) blas.emplace(obj, make_bla(entry.bla, obj));
  return std::make_unique<BlaCellStructure>(id, std::move(blas), std::move(entry.family));
}

namespace {

struct PairCells {
  std::vector<Cell> cells;
  // cells serialized for membership checks
  std::vector<std::string> keys;
  bool contains(const Cell& c) const {
    std::string k = cell_to_string(c);
    return std::binary_search(keys.begin(), keys.end(), k);
  }
};

PairCells collect(const BlaCellStructure& s, const FinMonoid* A, const FinMonoid* B) {
  PairCells pc;
  pc.cells = s.cells(A, B);
  pc.keys.reserve(pc.cells.size());
  for (const auto& c : pc.cells) pc.keys.push_back(cell_to_string(c));
  std::sort(pc.keys.begin(), pc.keys.end());
  return pc;
}

}  // namespace

ViolationReport check_six_conditions(const BlaCellStructure& s, const Context& ctx,
                                     SixConditionMode mode, long long cap) {
  ViolationReport rep;
  rep.cap = cap;
  const size_t nobj = ctx.size();

  if (mode == SixConditionMode::Element) {
    if (!s.family().full)
      throw Error("element-mode-unsupported", "element mode needs the full family");
    for (size_t b = 0; b < nobj; ++b)
      if (!s.bla_for(ctx.object(b)).r_full())
        throw Error("element-mode-unsupported", "element mode needs R = B^3",
                    {{"name", ctx.object(b)->name}});
    // Full R and full family make (1)-(4) structural: membership constraints
    // are vacuous and closure cannot fail. The content is (5) and (6); both
    // are checked over all element tuples, which covers every value a cell
    // could realize.
    for (size_t bi = 0; bi < nobj; ++bi) {
      const BlaStructure& bla = s.bla_for(ctx.object(bi));
      const int n = bla.n();
      for (int tv = 0; tv < n; ++tv)
        for (int fv = 0; fv < n; ++fv) {
          ++rep.checks;
          const int left = bla.m_at(tv, fv, bla.e[fv]);
          const int right = bla.m_at(bla.e[fv], fv, tv);
          if (left != tv)
            rep.record({"cond5",
                        {{"object", bla.B->name}, {"t", tv}, {"f", fv}},
                        nlohmann::ordered_json(left),
                        nlohmann::ordered_json(tv)});
          if (right != tv)
            rep.record({"cond5",
                        {{"object", bla.B->name}, {"g", fv}, {"t", tv}},
                        nlohmann::ordered_json(right),
                        nlohmann::ordered_json(tv)});
        }
      for (int t3 = 0; t3 < n; ++t3)
        for (int h = 0; h < n; ++h)
          for (int t2 = 0; t2 < n; ++t2)
            for (int g = 0; g < n; ++g)
              for (int t1 = 0; t1 < n; ++t1) {
                ++rep.checks;
                const int lhs = bla.m_at(t3, h, bla.m_at(t2, g, t1));
                const int rhs = bla.m_at(bla.m_at(t3, h, t2), g, t1);
                if (lhs != rhs)
                  rep.record({"cond6",
                              {{"object", bla.B->name},
                               {"t''", t3},
                               {"h", h},
                               {"t'", t2},
                               {"g", g},
                               {"t", t1}},
                              nlohmann::ordered_json(lhs),
                              nlohmann::ordered_json(rhs)});
              }
    }
    return rep;
  }

  // Family mode: quantify over the actual cells.
  std::vector<std::vector<PairCells>> cells(nobj, std::vector<PairCells>(nobj));
  for (size_t a = 0; a < nobj; ++a)
    for (size_t b = 0; b < nobj; ++b) cells[a][b] = collect(s, ctx.object(a), ctx.object(b));

  auto witness = [&](size_t a, size_t b, const Cell& x) {
    nlohmann::ordered_json w;
    w["A"] = ctx.object(a)->name;
    w["B"] = ctx.object(b)->name;
    w["x"] = cell_to_json(x);
    return w;
  };

  for (size_t a = 0; a < nobj; ++a)
    for (size_t b = 0; b < nobj; ++b) {
      const auto& H = cells[a][b];
      const FinMonoid* A = ctx.object(a);
      const FinMonoid* B = ctx.object(b);
      const BlaStructure& bla = s.bla_for(B);

      // (2) dom and cod are homs; (5) unit laws of m on every cell.
      for (const Cell& x : H.cells) {
        ++rep.checks;
        if (!is_hom(x.dom) || !is_hom(x.cod))
          rep.record({"cond2", witness(a, b, x), cell_to_json(x), nullptr});
        bool unit_ok = true;
        for (int i = 0; i < A->size && unit_ok; ++i) {
          const int t = x.mid.images[i], f = x.dom.images[i], g = x.cod.images[i];
          unit_ok = bla.contains(t, f, bla.e[f]) && bla.m_at(t, f, bla.e[f]) == t &&
                    bla.contains(bla.e[g], g, t) && bla.m_at(bla.e[g], g, t) == t;
        }
        if (!unit_ok)
          rep.record({"cond5", witness(a, b, x), cell_to_json(x), nullptr});
      }

      // (3) zero cells belong to the family.
      for (const Hom& f : ctx.homs(a, b)) {
        ++rep.checks;
        Cell z = s.zero(f);
        if (!H.contains(z))
          rep.record({"cond3", {{"A", A->name}, {"B", B->name}, {"f", f.images}},
                      cell_to_json(z), nullptr});
      }

      // (1) closure under whiskering by context homs.
      for (size_t a2 = 0; a2 < nobj; ++a2)
        for (size_t b2 = 0; b2 < nobj; ++b2) {
          for (const Hom& u : ctx.homs(b, b2))
            for (const Hom& v : ctx.homs(a2, a))
              for (const Cell& x : H.cells) {
                ++rep.checks;
                Cell w = s.whisker(u, x, v);
                if (!cells[a2][b2].contains(w)) {
                  nlohmann::ordered_json wj = witness(a, b, x);
                  wj["u"] = u.images;
                  wj["v"] = v.images;
                  rep.record({"cond1", std::move(wj), cell_to_json(w), nullptr});
                }
              }
        }

      // Bucket cells by dom/cod for the chained quantifications.
      std::map<std::vector<int>, std::vector<const Cell*>> by_dom, by_cod;
      for (const Cell& x : H.cells) {
        by_dom[x.dom.images].push_back(&x);
        by_cod[x.cod.images].push_back(&x);
      }

      // (4) closure under vertical sum.
      for (const auto& [g_images, uppers] : by_dom) {
        auto it = by_cod.find(g_images);
        if (it == by_cod.end()) continue;
        for (const Cell* x2 : uppers)
          for (const Cell* x1 : it->second) {
            ++rep.checks;
            Cell sum = s.vcompose(*x2, *x1);
            if (!H.contains(sum)) {
              nlohmann::ordered_json w;
              w["A"] = A->name;
              w["B"] = B->name;
              w["left"] = cell_to_json(*x2);
              w["right"] = cell_to_json(*x1);
              rep.record({"cond4", std::move(w), cell_to_json(sum), nullptr});
            }
          }
      }

      // (6) associativity of m over chained triples.
      for (const auto& [h_images, tops] : by_dom) {
        auto mid_it = by_cod.find(h_images);
        if (mid_it == by_cod.end()) continue;
        for (const Cell* x3 : tops)
          for (const Cell* x2 : mid_it->second) {
            auto low_it = by_cod.find(x2->dom.images);
            if (low_it == by_cod.end()) continue;
            for (const Cell* x1 : low_it->second) {
              ++rep.checks;
              bool ok = true;
              int bad = -1;
              for (int i = 0; i < A->size && ok; ++i) {
                const int t3 = x3->mid.images[i], h = x3->dom.images[i];
                const int t2 = x2->mid.images[i], g = x2->dom.images[i];
                const int t1 = x1->mid.images[i];
                const int inner_r = bla.m_at(t2, g, t1);
                const int inner_l = bla.m_at(t3, h, t2);
                if (bla.m_at(t3, h, inner_r) != bla.m_at(inner_l, g, t1)) {
                  ok = false;
                  bad = i;
                }
              }
              if (!ok) {
                nlohmann::ordered_json w;
                w["A"] = A->name;
                w["B"] = B->name;
                w["top"] = cell_to_json(*x3);
                w["middle"] = cell_to_json(*x2);
                w["bottom"] = cell_to_json(*x1);
                w["at"] = bad;
                rep.record({"cond6", std::move(w), nullptr, nullptr});
              }
            }
          }
      }
    }
  return rep;
}

ViolationReport equiv_case3_moncell(const Context& ctx, long long cap) {
  ViolationReport rep;
  rep.cap = cap;
  auto case3 = make_structure("case3", ctx.objects());
  MonBasicStructure basic;

  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      const FinMonoid* A = ctx.object(a);
      const FinMonoid* B = ctx.object(b);
      auto lhs = basic.cells(A, B);
      auto rhs = case3->cells(A, B);
      ++rep.checks;
      if (lhs.size() != rhs.size() || !std::equal(lhs.begin(), lhs.end(), rhs.begin())) {
        rep.record({"equiv-cells",
                    {{"A", A->name}, {"B", B->name}},
                    nlohmann::ordered_json(lhs.size()),
                    nlohmann::ordered_json(rhs.size())});
        continue;
      }
      for (const Hom& f : ctx.homs(a, b)) {
        ++rep.checks;
        if (basic.zero(f) != case3->zero(f))
          rep.record({"equiv-zero", {{"f", f.images}}, cell_to_json(basic.zero(f)),
                      cell_to_json(case3->zero(f))});
      }
      for (const Cell& x2 : lhs)
        for (const Cell& x1 : lhs) {
          if (x2.dom != x1.cod) continue;
          ++rep.checks;
          Cell sb = basic.vcompose(x2, x1);
          Cell sc = case3->vcompose(x2, x1);
          if (sb != sc) {
            nlohmann::ordered_json w;
            w["left"] = cell_to_json(x2);
            w["right"] = cell_to_json(x1);
            rep.record({"equiv-vcompose", std::move(w), cell_to_json(sb), cell_to_json(sc)});
          }
        }
      for (size_t a2 = 0; a2 < ctx.size(); ++a2)
        for (size_t b2 = 0; b2 < ctx.size(); ++b2)
          for (const Hom& u : ctx.homs(b, b2))
            for (const Hom& v : ctx.homs(a2, a))
              for (const Cell& x : lhs) {
                ++rep.checks;
                Cell wb = basic.whisker(u, x, v);
                Cell wc = case3->whisker(u, x, v);
                if (wb != wc) {
                  nlohmann::ordered_json w;
                  w["u"] = u.images;
                  w["v"] = v.images;
                  w["x"] = cell_to_json(x);
                  rep.record({"equiv-whisker", std::move(w), cell_to_json(wb),
                              cell_to_json(wc)});
                }
              }
    }
  return rep;
}

}  // namespace tcell
