#include "tcell/monoid.hpp"

#include <algorithm>
#include <numeric>

namespace tcell {

bool FinMonoid::is_commutative() const {
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

bool same_monoid(const FinMonoid* a, const FinMonoid* b) {
  return a == b || (a != nullptr && b != nullptr && a->name == b->name);
}

bool operator==(const ElementMap& a, const ElementMap& b) {
  return same_monoid(a.src, b.src) && same_monoid(a.tgt, b.tgt) && a.images == b.images;
}

FinMonoid validate_monoid(const std::vector<std::vector<int>>& table, int identity,
                          const std::string& name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("out-of-range", "empty table");
  FinMonoid m;
  m.name = name;
  m.size = n;
  m.identity = identity;
  m.table.resize(static_cast<size_t>(n) * n);
  if (identity < 0 || identity >= n)
    throw Error("out-of-range", "identity index out of range", {{"i", identity}, {"j", -1}});
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error("out-of-range", "table is not square", {{"i", i}, {"j", -1}});
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n)
        throw Error("out-of-range", "table entry out of range", {{"i", i}, {"j", j}});
      m.table[static_cast<size_t>(i) * n + j] = table[i][j];
    }
  }
  for (int a = 0; a < n; ++a) {
    if (m.op(identity, a) != a || m.op(a, identity) != a)
      throw Error("bad-identity", "identity law fails", {{"a", a}});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c)))
          throw Error("not-associative", "associativity fails",
                      {{"a", a}, {"b", b}, {"c", c}});

  // Derive inverses; the monoid is a group iff every element has a
  // two-sided one.
  std::vector<int> inv(n, -1);
  bool group = true;
  for (int a = 0; a < n && group; ++a) {
    for (int b = 0; b < n; ++b) {
      if (m.op(a, b) == identity && m.op(b, a) == identity) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) group = false;
  }
  m.is_group = group;
  if (group) m.inverse = std::move(inv);
  return m;
}

FinMonoid make_chain(int n) {
  if (n < 1) throw Error("out-of-range", "chain size must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = std::max(i, j);
  return validate_monoid(t, 0, "chain" + std::to_string(n));
}

FinMonoid make_cyclic(int n) {
  if (n < 1) throw Error("out-of-range", "cyclic order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return validate_monoid(t, 0, "Z" + std::to_string(n));
}

FinMonoid make_symmetric(int n) {
  if (n < 1 || n > 5) throw Error("out-of-range", "symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int sz = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(sz, std::vector<int>(sz));
  std::vector<int> prod(n);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(prod);
    }
  return validate_monoid(t, 0, "S" + std::to_string(n));
}

FinMonoid make_bool_and() {
  return validate_monoid({{0, 0}, {0, 1}}, 1, "bool-and");
}

bool is_hom(const ElementMap& m) {
  const FinMonoid& A = *m.src;
  const FinMonoid& B = *m.tgt;
  if (m.images[A.identity] != B.identity) return false;
  for (int a = 0; a < A.size; ++a)
    for (int b = 0; b < A.size; ++b)
      if (m.images[A.op(a, b)] != B.op(m.images[a], m.images[b])) return false;
  return true;
}

std::vector<Hom> enumerate_homs(const FinMonoid* A, const FinMonoid* B) {
  std::vector<Hom> out;
  ElementMap cand;
  cand.src = A;
  cand.tgt = B;
  cand.images.assign(A->size, 0);
  // Odometer over all |B|^|A| image vectors, lexicographic.
  while (true) {
    if (is_hom(cand)) {
      Hom h;
      static_cast<ElementMap&>(h) = cand;
      out.push_back(std::move(h));
    }
    int pos = A->size - 1;
    while (pos >= 0 && cand.images[pos] == B->size - 1) cand.images[pos--] = 0;
    if (pos < 0) break;
    ++cand.images[pos];
  }
  return out;
}

Hom require_hom(ElementMap m) {
  if (!is_hom(m))
    throw Error("not-a-hom", "map does not satisfy the homomorphism laws",
                {{"images", m.images}});
  Hom h;
  static_cast<ElementMap&>(h) = std::move(m);
  return h;
}

ElementMap identity_map(const FinMonoid* A) {
  ElementMap m;
  m.src = m.tgt = A;
  m.images.resize(A->size);
  std::iota(m.images.begin(), m.images.end(), 0);
  return m;
}

Hom identity_hom(const FinMonoid* A) {
  Hom h;
  static_cast<ElementMap&>(h) = identity_map(A);
  return h;
}

ElementMap constant_map(const FinMonoid* A, const FinMonoid* B, int c) {
  ElementMap m;
  m.src = A;
  m.tgt = B;
  m.images.assign(A->size, c);
  return m;
}

Hom zero_hom(const FinMonoid* A, const FinMonoid* B) {
  Hom h;
  static_cast<ElementMap&>(h) = constant_map(A, B, B->identity);
  return h;
}

static void require_chain(const ElementMap& g, const ElementMap& f) {
  if (!same_monoid(f.tgt, g.src))
    throw Error("endpoint-mismatch", "composition endpoints do not match",
                {{"inner_tgt", f.tgt ? f.tgt->name : "?"},
                 {"outer_src", g.src ? g.src->name : "?"}});
}

ElementMap compose(const ElementMap& g, const ElementMap& f) {
  require_chain(g, f);
  ElementMap r;
  r.src = f.src;
  r.tgt = g.tgt;
  r.images.resize(f.images.size());
  for (size_t a = 0; a < f.images.size(); ++a) r.images[a] = g.images[f.images[a]];
  return r;
}

Hom compose(const Hom& g, const Hom& f) {
  Hom h;
  static_cast<ElementMap&>(h) =
      compose(static_cast<const ElementMap&>(g), static_cast<const ElementMap&>(f));
  return h;
}

ElementMap add_pointwise(const ElementMap& t, const ElementMap& s) {
  if (!same_monoid(t.src, s.src) || !same_monoid(t.tgt, s.tgt))
    throw Error("endpoint-mismatch", "pointwise sum needs identical endpoints");
  ElementMap r;
  r.src = t.src;
  r.tgt = t.tgt;
  r.images.resize(t.images.size());
  for (size_t a = 0; a < t.images.size(); ++a)
    r.images[a] = t.tgt->op(t.images[a], s.images[a]);
  return r;
}

}  // namespace tcell
