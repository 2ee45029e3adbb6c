#pragma once

#include <vector>

#include "tcell/structure.hpp"

namespace tcell {

/// Membership test for the basic monoid 2-cell structure: t fixes the
/// identity and t(x+y)+f(x)+f(y) = t(x)+f(x)+t(y)+f(y) for all x, y.
/// Equivalent to "t+f is a homomorphism"; tests cross-check the two routes.
bool mon_member(const ElementMap& t, const Hom& f);

/// Builds a cell (dom f, mid t, cod t+f), validating membership.
/// Throws "not-a-cell" if (t,f) fails the membership equation.
Cell mon_cell(const ElementMap& t, const Hom& f);

/// All member pairs (t,f), f over homs and t over identity-fixing maps,
/// in (dom, mid) lexicographic order.
std::vector<Cell> mon_cells(const FinMonoid* A, const FinMonoid* B);

/// When the target is a group, membership coincides with the crossed
/// homomorphism identity t(x+y) = t(x) + f(x) + t(y) - f(x). Evaluates both
/// predicates independently and returns their agreement for this (t,f).
/// Throws "not-a-group" if B is not a group.
bool crossed_hom_equiv(const ElementMap& t, const Hom& f);

/// The structure itself ("mon-basic"): zero(f) = (0,f),
/// (s,g)+(t,f) = (s+t,f) when g = t+f, u(t,f)v = (utv, ufv).
class MonBasicStructure final : public CellStructure {
 public:
  const std::string& id() const override;
  std::vector<Cell> cells(const FinMonoid* A, const FinMonoid* B) const override;
  Cell zero(const Hom& f) const override;
  Cell vcompose(const Cell& x2, const Cell& x1) const override;
  Cell whisker(const Hom& u, const Cell& x, const Hom& v) const override;
};

}  // namespace tcell
