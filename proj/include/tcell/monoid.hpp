#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcell/error.hpp"

namespace tcell {

/// A finite monoid given by its Cayley table. Elements are the indices
/// 0..size-1; table[a][b] is stored row-major as table[a*size+b].
/// Instances are immutable after validation and are normally owned by a
/// Registry, so the rest of the library refers to them by pointer.
struct FinMonoid {
  std::string name;
  int size = 0;
  int identity = 0;
  std::vector<int> table;    // row-major size*size
  bool is_group = false;
  std::vector<int> inverse;  // per-element inverse, empty unless is_group

  int op(int a, int b) const { return table[a * size + b]; }
  int inv(int a) const { return inverse[a]; }
  bool is_commutative() const;
};

/// Total map between the carriers of two monoids, as an image vector.
/// Equality is equality of endpoints and images; no quotienting.
struct ElementMap {
  const FinMonoid* src = nullptr;
  const FinMonoid* tgt = nullptr;
  std::vector<int> images;

  int operator()(int a) const { return images[a]; }
};

/// An ElementMap that satisfies the homomorphism laws. Construct through
/// require_hom() or enumerate_homs(); the tag is trusted after that.
struct Hom : ElementMap {};

bool same_monoid(const FinMonoid* a, const FinMonoid* b);
bool operator==(const ElementMap& a, const ElementMap& b);
inline bool operator!=(const ElementMap& a, const ElementMap& b) { return !(a == b); }

/// Validates a Cayley table and derives the group structure if present.
/// Throws Error with code "out-of-range", "bad-identity" or
/// "not-associative" carrying the first witness in scan order.
FinMonoid validate_monoid(const std::vector<std::vector<int>>& table, int identity,
                          const std::string& name = "anonymous");

/// ({0..n-1}, max, 0).
FinMonoid make_chain(int n);

/// Z_n under addition mod n.
FinMonoid make_cyclic(int n);

/// Symmetric group on n letters (n <= 5); permutations enumerated in
/// lexicographic one-line order, product (a*b)(x) = a(b(x)).
FinMonoid make_symmetric(int n);

/// ({0,1}, AND, 1).
FinMonoid make_bool_and();

bool is_hom(const ElementMap& m);

/// All homomorphisms A -> B in lexicographic image order.
std::vector<Hom> enumerate_homs(const FinMonoid* A, const FinMonoid* B);

/// Checks the hom laws and rewraps; throws "not-a-hom" on failure.
Hom require_hom(ElementMap m);

ElementMap identity_map(const FinMonoid* A);
Hom identity_hom(const FinMonoid* A);

/// a |-> c for all a.
ElementMap constant_map(const FinMonoid* A, const FinMonoid* B, int c);

/// The zero map a |-> identity of B; always a homomorphism.
Hom zero_hom(const FinMonoid* A, const FinMonoid* B);

/// g after f. Throws "endpoint-mismatch" unless f.tgt == g.src.
ElementMap compose(const ElementMap& g, const ElementMap& f);
Hom compose(const Hom& g, const Hom& f);

/// Pointwise sum a |-> t(a) + s(a) in the common target.
/// Throws "endpoint-mismatch" unless endpoints coincide.
ElementMap add_pointwise(const ElementMap& t, const ElementMap& s);

}  // namespace tcell
