#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcell/context.hpp"
#include "tcell/mon_basic.hpp"
#include "tcell/registry.hpp"
#include "tcell/report.hpp"
#include "tcell/structure.hpp"

namespace tcell {

/// A four-tuple (B, R, m, e): a ternary relation R on the carrier of B, a
/// partial operation m defined exactly on R, and an endomap e, subject to
/// two closure conditions (see validate_bla). "Factors through R" is read
/// pointwise on elements throughout.
struct BlaStructure {
  const FinMonoid* B = nullptr;
  std::vector<char> in_R;  // size n^3, indexed (b1*n + b2)*n + b3
  std::vector<int> m;      // same indexing; -1 outside R
  std::vector<int> e;      // size n

  int n() const { return B->size; }
  size_t idx(int b1, int b2, int b3) const {
    return (static_cast<size_t>(b1) * n() + b2) * n() + b3;
  }
  bool contains(int b1, int b2, int b3) const { return in_R[idx(b1, b2, b3)] != 0; }
  int m_at(int b1, int b2, int b3) const { return m[idx(b1, b2, b3)]; }
  bool r_full() const;

  /// R as a sorted triple list (serialization order).
  std::vector<std::array<int, 3>> r_triples() const;
};

/// Checks ranges plus the two closure conditions:
///   (2) (e(b), b, e(b)) is in R for every b;
///   (1) (b1,b2,e(b2)) in R and (e(b2),b2,b3) in R imply (b1,b2,b3) in R.
/// Throws "bla-cond2" {b} or "bla-cond1" {b1,b2,b3} with the first witness
/// in scan order; "out-of-range"/"format" for malformed tables.
BlaStructure validate_bla(const FinMonoid* B,
                          const std::vector<std::array<int, 3>>& r_triples,
                          const std::vector<std::array<int, 4>>& m_entries,
                          const std::vector<int>& e);

/// Builtin parameterizations.
enum class BlaKind {
  MonDefault,  // R = B^3, m(b1,b2,b3) = b1+b3, e = 0
  Maltsev,     // groups: R = B^3, m = b1-b2+b3, e = id
  Inverse,     // groups: R = B^3, m = b1+b2+b3, e = negation
  Diagonal,    // R = {(b,b,b)}, m = projection, e = id
  Pi2,         // R = B^3, m = middle projection, e = id
};

BlaStructure make_bla(BlaKind kind, const FinMonoid* B);

/// JSON: {"monoid": name, "R": [[b1,b2,b3]...], "m": [[b1,b2,b3,value]...],
/// "e": [ints]}.
BlaStructure bla_from_json(const nlohmann::json& j, Registry& reg);
nlohmann::ordered_json bla_to_json(const BlaStructure& bla);

/// All of H_R(A,B): column vectors [f;t;g] with f,g homs and t any map such
/// that (t,f,ef) and (eg,g,t) land in R pointwise. (dom,mid,cod) lex order.
std::vector<Cell> hr_cells(const BlaStructure& bla, const FinMonoid* A, const FinMonoid* B);

/// A named selection of a subset of H_R per object pair.
struct CellFamily {
  std::string name;
  bool full = false;  // selects all of H_R
  std::function<bool(const Hom& f, const ElementMap& t, const Hom& g)> member;
};

/// The 2-cell structure induced by a bla assignment and a family:
/// dom [f;t;g] = f, cod = g, zero(f) = [f; ef; f],
/// [g;t';h] + [f;t;g] = [f; m<t',g,t>; h], u[f;t;g]v = [ufv; utv; ugv].
class BlaCellStructure final : public CellStructure {
 public:
  BlaCellStructure(std::string id, std::map<const FinMonoid*, BlaStructure> blas,
                   CellFamily family)
      : id_(std::move(id)), blas_(std::move(blas)), family_(std::move(family)) {}

  const std::string& id() const override { return id_; }
  std::vector<Cell> cells(const FinMonoid* A, const FinMonoid* B) const override;
  Cell zero(const Hom& f) const override;
  Cell vcompose(const Cell& x2, const Cell& x1) const override;
  Cell whisker(const Hom& u, const Cell& x, const Hom& v) const override;

  const BlaStructure& bla_for(const FinMonoid* B) const;
  const CellFamily& family() const { return family_; }

 private:
  std::string id_;
  std::map<const FinMonoid*, BlaStructure> blas_;
  CellFamily family_;
};

/// Catalog of named families with their recommended bla:
///   case1 full; case2 t constant; case3 g = t+f; case4 t = 0;
///   case5 t = 0 and g = f; case6 g+t = t+f; case7 case6 and t constant;
///   maltsev, inverse (group variants, full family);
///   mon-default (alias of case1); diagonal; pi2-full.
/// Throws "unknown-case".
struct CatalogEntry {
  CellFamily family;
  BlaKind bla;
};
CatalogEntry catalog(const std::string& case_id);

/// Builds the structure a catalog id denotes over the given objects.
/// "mon-basic" resolves to the independent MonBasicStructure implementation.
std::unique_ptr<CellStructure> make_structure(const std::string& id,
                                              const std::vector<const FinMonoid*>& objects);

enum class SixConditionMode {
  Family,   // quantifies over actual cells of the family
  Element,  // carrier-element quantification; needs full R and full family
};

/// Exhaustive check of the six closure/unit/associativity conditions that
/// make (assignment, family) a 2-cell structure. Violation axiom ids are
/// "cond1".."cond6". Element mode replaces the cell quantifications of
/// cond5/cond6 by element tuples (a superset of the realizable values, so
/// an ok verdict implies the family-level one) and is the only feasible
/// route for carriers whose map spaces are too large to enumerate.
ViolationReport check_six_conditions(const BlaCellStructure& s, const Context& ctx,
                                     SixConditionMode mode = SixConditionMode::Family,
                                     long long cap = -1);

/// Cross-validates the two independent realizations of the basic monoid
/// structure: cells of catalog case3 (over the default bla) must coincide
/// with mon_cells on every pair, and zero/vcompose/whisker must agree.
/// Violation ids: "equiv-cells", "equiv-zero", "equiv-vcompose",
/// "equiv-whisker".
ViolationReport equiv_case3_moncell(const Context& ctx, long long cap = -1);

}  // namespace tcell
