#pragma once

// Shared test helpers: fixture paths, independent oracles and the corrupted
// structure wrappers used by the mutation-sensitivity tests. Oracles here
// re-derive expected values along a route independent of the library code
// they check.

#include <string>
#include <vector>

#include "tcell/mon_basic.hpp"
#include "tcell/monoid.hpp"
#include "tcell/structure.hpp"

#ifndef TCELL_FIXTURE_DIR
#define TCELL_FIXTURE_DIR "fixtures"
#endif

namespace tsupport {

inline std::string fixture(const std::string& rel) {
  return std::string(TCELL_FIXTURE_DIR) + "/" + rel;
}

// Homomorphism predicate written as a plain per-pair loop, independent of
// tcell::is_hom.
inline bool hom_oracle(const tcell::FinMonoid& A, const tcell::FinMonoid& B,
                       const std::vector<int>& images) {
  if (images[A.identity] != B.identity) return false;
  for (int x = 0; x < A.size; ++x)
    for (int y = 0; y < A.size; ++y) {
      const int xy = A.table[static_cast<size_t>(x) * A.size + y];
      const int lhs = images[xy];
      const int rhs = B.table[static_cast<size_t>(images[x]) * B.size + images[y]];
      if (lhs != rhs) return false;
    }
  return true;
}

// All image vectors A -> B in lexicographic order (unfiltered).
inline std::vector<std::vector<int>> all_maps(const tcell::FinMonoid& A,
                                              const tcell::FinMonoid& B) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(A.size, 0);
  while (true) {
    out.push_back(cur);
    int pos = A.size - 1;
    while (pos >= 0 && cur[pos] == B.size - 1) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

inline tcell::Hom as_hom_unchecked(tcell::ElementMap m) {
  tcell::Hom h;
  static_cast<tcell::ElementMap&>(h) = std::move(m);
  return h;
}

inline tcell::Cell raw_cell(tcell::ElementMap t, tcell::Hom f, tcell::Hom g) {
  tcell::Cell c;
  c.dom = std::move(f);
  c.mid = std::move(t);
  c.cod = std::move(g);
  return c;
}

// --- single-law corruptions of the basic monoid structure ------------------

// Vertical sum drops the lower payload: (s,g)+(t,f) = (s,f).
struct CorruptVcompose final : tcell::CellStructure {
  tcell::MonBasicStructure base;
  const std::string& id() const override {
    static const std::string s = "corrupt-vcompose";
    return s;
  }
  std::vector<tcell::Cell> cells(const tcell::FinMonoid* A,
                                 const tcell::FinMonoid* B) const override {
    return base.cells(A, B);
  }
  tcell::Cell zero(const tcell::Hom& f) const override { return base.zero(f); }
  tcell::Cell whisker(const tcell::Hom& u, const tcell::Cell& x,
                      const tcell::Hom& v) const override {
    return base.whisker(u, x, v);
  }
  tcell::Cell vcompose(const tcell::Cell& x2, const tcell::Cell& x1) const override {
    return raw_cell(x2.mid, x1.dom, as_hom_unchecked(tcell::add_pointwise(x2.mid, x1.dom)));
  }
};

// Whiskering returns a zero-payload cell on one specific (u, x) input, which
// breaks functoriality along any factorization of u through other homs.
struct CorruptWhisker final : tcell::CellStructure {
  tcell::MonBasicStructure base;
  tcell::Hom trigger_u;
  tcell::Cell trigger_x;
  const std::string& id() const override {
    static const std::string s = "corrupt-whisker";
    return s;
  }
  std::vector<tcell::Cell> cells(const tcell::FinMonoid* A,
                                 const tcell::FinMonoid* B) const override {
    return base.cells(A, B);
  }
  tcell::Cell zero(const tcell::Hom& f) const override { return base.zero(f); }
  tcell::Cell vcompose(const tcell::Cell& x2, const tcell::Cell& x1) const override {
    return base.vcompose(x2, x1);
  }
  tcell::Cell whisker(const tcell::Hom& u, const tcell::Cell& x,
                      const tcell::Hom& v) const override {
    if (u == trigger_u && x == trigger_x) {
      tcell::Hom f = tcell::compose(u, tcell::compose(x.dom, v));
      return raw_cell(tcell::constant_map(f.src, f.tgt, f.tgt->identity), f, f);
    }
    return base.whisker(u, x, v);
  }
};

// Identity cells report the zero hom as cod instead of f.
struct CorruptZero final : tcell::CellStructure {
  tcell::MonBasicStructure base;
  const std::string& id() const override {
    static const std::string s = "corrupt-zero";
    return s;
  }
  std::vector<tcell::Cell> cells(const tcell::FinMonoid* A,
                                 const tcell::FinMonoid* B) const override {
    return base.cells(A, B);
  }
  tcell::Cell vcompose(const tcell::Cell& x2, const tcell::Cell& x1) const override {
    return base.vcompose(x2, x1);
  }
  tcell::Cell whisker(const tcell::Hom& u, const tcell::Cell& x,
                      const tcell::Hom& v) const override {
    return base.whisker(u, x, v);
  }
  tcell::Cell zero(const tcell::Hom& f) const override {
    return raw_cell(tcell::constant_map(f.src, f.tgt, f.tgt->identity), f,
                    tcell::zero_hom(f.src, f.tgt));
  }
};

// The corrupted whisker instance aimed at chain3 with a provably violated
// functoriality instance: trigger_u = (0,0,2) factors as (0,2,2) o (0,0,1),
// trigger_x = (id, id).
inline CorruptWhisker make_chain3_whisker_corruption(const tcell::FinMonoid* chain3) {
  CorruptWhisker cw;
  tcell::ElementMap u;
  u.src = u.tgt = chain3;
  u.images = {0, 0, 2};
  cw.trigger_u = tcell::require_hom(u);
  cw.trigger_x = tcell::mon_cell(tcell::identity_map(chain3), tcell::identity_hom(chain3));
  return cw;
}

}  // namespace tsupport
