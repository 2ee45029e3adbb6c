#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcell/registry.hpp"
#include "tcell/report.hpp"

namespace tcell {

/// A two-sided action of a monoid M on an additively written monoid A:
/// act(u,a,v) subject to zero-preservation, additivity, functoriality and
/// the unit law. Realizes the cell fiber of a one-object 2-cell structure.
struct Semibimodule {
  const FinMonoid* M = nullptr;  // the one-object category
  const FinMonoid* A = nullptr;  // the fiber
  std::vector<int> act;          // (u*|A| + a)*|M| + v

  int act_at(int u, int a, int v) const {
    return act[(static_cast<size_t>(u) * A->size + a) * M->size + v];
  }
};

/// Validates the four action laws. Throws "semibim-law" with
/// detail.law in {"act-zero","act-add","act-mu","act-unit"} and a witness.
Semibimodule validate_semibimodule(const FinMonoid* M, const FinMonoid* A,
                                   const std::vector<int>& act);

/// JSON: {"M": name, "A": name, "act": [[u,a,v,result]...]} (total table).
Semibimodule semibim_from_json(const nlohmann::json& j, Registry& reg);
nlohmann::ordered_json semibim_to_json(const Semibimodule& sb);

/// A 2-cell over the one-object category M: a triple with dom f, cod g in M
/// and payload a in the fiber.
struct OneObjectCell {
  int g = 0;  // cod
  int a = 0;  // payload
  int f = 0;  // dom
};
inline bool operator==(const OneObjectCell& x, const OneObjectCell& y) {
  return x.g == y.g && x.a == y.a && x.f == y.f;
}
inline bool operator!=(const OneObjectCell& x, const OneObjectCell& y) { return !(x == y); }

/// The induced one-object structure: H = M x A x M with
/// zero(f) = (f,0,f), (h,a1,g)+(g,a2,f) = (h,a1+a2,f) and
/// whisker(u,(g,a,f),v) = (ugv, act(u,a,v), ufv).
class EmbeddedStructure {
 public:
  explicit EmbeddedStructure(const Semibimodule* sb) : sb_(sb) {}

  const Semibimodule& semibimodule() const { return *sb_; }
  const FinMonoid* monoid() const { return sb_->M; }
  const FinMonoid* fiber() const { return sb_->A; }

  /// All |M|^2 * |A| cells in (dom, payload, cod) lexicographic order.
  std::vector<OneObjectCell> cells() const;
  OneObjectCell zero(int f) const;
  OneObjectCell vcompose(const OneObjectCell& x2, const OneObjectCell& x1) const;
  OneObjectCell whisker(int u, const OneObjectCell& x, int v) const;

 private:
  const Semibimodule* sb_;
};

/// Model adapter feeding EmbeddedStructure into the generic verifier.
class OneObjectModel {
 public:
  using Mor = int;
  using CellT = OneObjectCell;

  explicit OneObjectModel(const EmbeddedStructure& s);

  size_t object_count() const { return 1; }
  std::string object_name(size_t) const { return s_->monoid()->name; }
  const std::vector<int>& homs(size_t, size_t) const { return elements_; }
  int compose(int g, int f) const { return s_->monoid()->op(g, f); }
  int identity(size_t) const { return s_->monoid()->identity; }
  std::vector<OneObjectCell> cells(size_t, size_t) const { return s_->cells(); }
  int dom(const OneObjectCell& x) const { return x.f; }
  int cod(const OneObjectCell& x) const { return x.g; }
  OneObjectCell zero(int f) const { return s_->zero(f); }
  OneObjectCell vcompose(const OneObjectCell& x2, const OneObjectCell& x1) const {
    return s_->vcompose(x2, x1);
  }
  OneObjectCell whisker(int u, const OneObjectCell& x, int v) const {
    return s_->whisker(u, x, v);
  }
  bool chainable(const OneObjectCell&, const OneObjectCell&) const { return true; }
  int id_src(const OneObjectCell&) const { return s_->monoid()->identity; }
  int id_tgt(const OneObjectCell&) const { return s_->monoid()->identity; }
  nlohmann::ordered_json mor_json(int u) const {
    return nlohmann::ordered_json{{"hom", {u}}};
  }
  nlohmann::ordered_json cell_json(const OneObjectCell& x) const;

 private:
  const EmbeddedStructure* s_;
  std::vector<int> elements_;
};

/// The naturality identity specialized to one object:
/// act(1,a,g') + act(f,a',1) = act(g,a',1) + act(1,a,f')
/// for x = (g,a,f), y = (g',a',f').
bool sb_natural_wrt(const Semibimodule& sb, const OneObjectCell& x, const OneObjectCell& y);

/// A splitting of the zero transformation of a one-object structure:
/// zero_lo(g) goes 1 => g, zero_hi(f) goes f => 1, and q retracts cells
/// onto the carrier {x : dom(x) = cod(x) = 1}.
struct SplittingData {
  const EmbeddedStructure* s = nullptr;
  std::function<OneObjectCell(int)> zero_lo;
  std::function<OneObjectCell(int)> zero_hi;
  std::function<OneObjectCell(const OneObjectCell&)> q;
};

/// zero_lo(g) = (g,0,1), zero_hi(f) = (1,0,f), q(g,a,f) = (1,a,1).
SplittingData canonical_splitting(const EmbeddedStructure& s);

/// The action-with-partial-sum recovered from a splitting: carrier cells,
/// mu over M x carrier x M and rho over carrier x M x carrier, as index
/// tables into the carrier list.
struct GeneralizedSemibimodule {
  const FinMonoid* M = nullptr;
  std::vector<OneObjectCell> carrier;
  int zero_index = -1;            // position of 0(1)
  std::vector<int> mu;            // (u*|carrier| + a)*|M| + v -> carrier index
  std::vector<int> rho;           // (a1*|M| + g)*|carrier| + a2 -> carrier index

  int mu_at(int u, int a, int v) const {
    return mu[(static_cast<size_t>(u) * carrier.size() + a) * M->size + v];
  }
  int rho_at(int a1, int g, int a2) const {
    return rho[(static_cast<size_t>(a1) * M->size + g) * carrier.size() + a2];
  }
};

/// Outcome of the recovery procedure. Violations are grouped by stage:
///   splitting — ids split-endpoints, split-zero, split-qk, split-q-carrier,
///               split-decompose, split-q-lo, split-q-hi, split-q-add;
///   bijection — ids alpha-beta, beta-alpha;
///   laws      — ids gen-mu-zero, gen-rho-equivariance, gen-mu-mu,
///               gen-mu-unit, gen-rho-unit, gen-rho-assoc, rho-escapes.
/// zero_split_identity reports the discardable condition
/// 0(1) = zero_hi(f) + zero_lo(f); recovery proceeds without it.
struct RecoveryResult {
  ViolationReport splitting;
  ViolationReport bijection;
  ViolationReport laws;
  bool zero_split_identity = false;
  std::optional<GeneralizedSemibimodule> value;

  bool ok() const { return splitting.ok() && bijection.ok() && laws.ok(); }
};

RecoveryResult recover(const SplittingData& sd);

nlohmann::ordered_json recovery_to_json(const RecoveryResult& r);

}  // namespace tcell
