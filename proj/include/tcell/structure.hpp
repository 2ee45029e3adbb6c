#pragma once

#include <string>
#include <vector>

#include "tcell/cell.hpp"

namespace tcell {

/// A 2-cell structure over monoid contexts: a family of cell sets indexed by
/// object pairs together with zero, vertical composition and whiskering.
/// The interface carries no laws; verify_structure_axioms checks them.
class CellStructure {
 public:
  virtual ~CellStructure() = default;

  virtual const std::string& id() const = 0;

  /// All cells A => B in (dom, mid, cod) lexicographic order.
  virtual std::vector<Cell> cells(const FinMonoid* A, const FinMonoid* B) const = 0;

  /// Identity 2-cell on a hom.
  virtual Cell zero(const Hom& f) const = 0;

  /// x2 + x1, defined when dom(x2) = cod(x1). Throws "not-chained".
  virtual Cell vcompose(const Cell& x2, const Cell& x1) const = 0;

  /// mu(u, x, v): whiskering by u after and v before. Throws "not-chained"
  /// on endpoint mismatch.
  virtual Cell whisker(const Hom& u, const Cell& x, const Hom& v) const = 0;
};

}  // namespace tcell
