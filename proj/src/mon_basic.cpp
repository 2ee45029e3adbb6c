#include "tcell/mon_basic.hpp"

#include "tcell/error.hpp"

namespace tcell {

bool mon_member(const ElementMap& t, const Hom& f) {
  const FinMonoid& A = *t.src;
  const FinMonoid& B = *t.tgt;
  if (t.images[A.identity] != B.identity) return false;
  for (int x = 0; x < A.size; ++x)
    for (int y = 0; y < A.size; ++y) {
      const int lhs = B.op(B.op(t.images[A.op(x, y)], f.images[x]), f.images[y]);
      const int rhs = B.op(B.op(B.op(t.images[x], f.images[x]), t.images[y]), f.images[y]);
      if (lhs != rhs) return false;
    }
  return true;
}

Cell mon_cell(const ElementMap& t, const Hom& f) {
  if (!same_monoid(t.src, f.src) || !same_monoid(t.tgt, f.tgt))
    throw Error("endpoint-mismatch", "t and f need identical endpoints");
  if (!mon_member(t, f))
    throw Error("not-a-cell", "pair fails the membership equation",
                {{"t", t.images}, {"f", f.images}});
  Cell c;
  c.dom = f;
  c.mid = t;
  c.cod = require_hom(add_pointwise(t, f));
  return c;
}

std::vector<Cell> mon_cells(const FinMonoid* A, const FinMonoid* B) {
  std::vector<Cell> out;
  for (const Hom& f : enumerate_homs(A, B)) {
    ElementMap t;
    t.src = A;
    t.tgt = B;
    t.images.assign(A->size, 0);
    while (true) {
      if (t.images[A->identity] == B->identity && mon_member(t, f))
        out.push_back(mon_cell(t, f));
      int pos = A->size - 1;
      while (pos >= 0 && t.images[pos] == B->size - 1) t.images[pos--] = 0;
      if (pos < 0) break;
      ++t.images[pos];
    }
  }
  return out;
}

bool crossed_hom_equiv(const ElementMap& t, const Hom& f) {
  const FinMonoid& A = *t.src;
  const FinMonoid& B = *t.tgt;
  if (!B.is_group) throw Error("not-a-group", "crossed identity needs a group target");
  bool member = mon_member(t, f);
  bool crossed = true;
  for (int x = 0; x < A.size && crossed; ++x)
    for (int y = 0; y < A.size; ++y) {
      const int lhs = t.images[A.op(x, y)];
      const int rhs =
          B.op(B.op(B.op(t.images[x], f.images[x]), t.images[y]), B.inv(f.images[x]));
      if (lhs != rhs) {
        crossed = false;
        break;
      }
    }
  return member == crossed;
}

const std::string& MonBasicStructure::id() const {
  static const std::string kId = "mon-basic";
  return kId;
}

std::vector<Cell> MonBasicStructure::cells(const FinMonoid* A, const FinMonoid* B) const {
  return mon_cells(A, B);
}

Cell MonBasicStructure::zero(const Hom& f) const {
  return mon_cell(constant_map(f.src, f.tgt, f.tgt->identity), f);
}

Cell MonBasicStructure::vcompose(const Cell& x2, const Cell& x1) const {
  if (x2.dom != x1.cod)
    throw Error("not-chained", "vertical composition needs dom(left) = cod(right)",
                {{"left", cell_to_json(x2)}, {"right", cell_to_json(x1)}});
  ElementMap s = add_pointwise(x2.mid, x1.mid);
  Cell r = mon_cell(s, x1.dom);
  if (r.cod != x2.cod)
    throw Error("invariant-broken", "derived cod of a vertical sum disagrees");
  return r;
}

Cell MonBasicStructure::whisker(const Hom& u, const Cell& x, const Hom& v) const {
  if (!same_monoid(v.tgt, x.src()) || !same_monoid(u.src, x.tgt()))
    throw Error("not-chained", "whiskering endpoints do not match");
  ElementMap t = compose(static_cast<const ElementMap&>(u), compose(x.mid, v));
  Hom f = compose(u, compose(x.dom, v));
  // Membership is a theorem here (u is a hom); validate anyway so a fault
  // surfaces as "not-a-cell" instead of corrupting downstream data.
  return mon_cell(t, f);
}

}  // namespace tcell
