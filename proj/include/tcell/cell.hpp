#pragma once

#include <string>

#include <json.hpp>

#include "tcell/monoid.hpp"

namespace tcell {

/// A 2-cell between parallel homomorphisms: dom and cod are homs src -> tgt
/// and mid is the structure-specific middle map with the same endpoints.
/// dom and cod are stored even where a structure could derive them; each
/// structure's factory validates the derived value against the stored one.
struct Cell {
  Hom dom;
  ElementMap mid;
  Hom cod;

  const FinMonoid* src() const { return mid.src; }
  const FinMonoid* tgt() const { return mid.tgt; }
};

bool operator==(const Cell& a, const Cell& b);
inline bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }

nlohmann::ordered_json cell_to_json(const Cell& c);

/// Compact "(dom | mid | cod)" rendering for reports.
std::string cell_to_string(const Cell& c);

}  // namespace tcell
