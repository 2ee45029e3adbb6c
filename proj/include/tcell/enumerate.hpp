#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tcell/bla.hpp"
#include "tcell/context.hpp"
#include "tcell/structure.hpp"

namespace tcell {

struct EnumOptions {
  int shards = 1;          // candidate space is split by leading R bits;
                           // results are concatenated in shard order
  bool restricted = false; // formula-generated m/e instead of raw tables
};

/// All valid (R, m, e) structures on B in deterministic order (R bitmask
/// ascending, e ascending, m ascending). Exhaustive mode enumerates every
/// subset R of B^3, every m-table on R and every e, so it is guarded to
/// |B| <= 2 (search space 4*3^8 there); larger carriers need
/// opts.restricted, which draws m and e from a fixed formula family.
/// Throws "too-large" when the guard trips.
std::vector<BlaStructure> enum_bla(const FinMonoid* B, const EnumOptions& opts = {});

struct CensusRow {
  const FinMonoid* A = nullptr;
  const FinMonoid* B = nullptr;
  long long cells = 0;
  long long natural = 0;        // cells natural against every incoming cell
  long long nat_fail_pairs = 0; // chained pairs failing the naturality identity
};

/// Per object pair: cell count, natural-cell count and the number of
/// chained pairs (x in H(A,B), y in H(X,A), X over the context) whose
/// candidate composites disagree.
std::vector<CensusRow> census(const CellStructure& s, const Context& ctx);

nlohmann::ordered_json census_to_json(const std::vector<CensusRow>& rows);

long long count_cells(const CellStructure& s, const FinMonoid* A, const FinMonoid* B);

/// Pinned regression constants. Looks at the TCELL_FIXTURES environment
/// variable first, then the compiled-in default path. Returns an empty
/// object if neither exists.
nlohmann::json load_pinned_counts();

}  // namespace tcell
