#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcell/monoid.hpp"

namespace tcell {

/// An ordered list of objects (finite monoids) together with cached hom-set
/// enumerations. All verification loops quantify over a Context; enumeration
/// order is the registry order given here, so results are deterministic.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<const FinMonoid*> objects) : objects_(std::move(objects)) {}

  const std::vector<const FinMonoid*>& objects() const { return objects_; }
  size_t size() const { return objects_.size(); }
  const FinMonoid* object(size_t i) const { return objects_[i]; }

  /// Homs from objects_[a] to objects_[b], lexicographic image order.
  const std::vector<Hom>& homs(size_t a, size_t b) const;
  const std::vector<Hom>& homs(const FinMonoid* A, const FinMonoid* B) const;

  size_t index_of(const FinMonoid* m) const;

 private:
  std::vector<const FinMonoid*> objects_;
  mutable std::map<std::pair<const FinMonoid*, const FinMonoid*>, std::vector<Hom>> hom_cache_;
};

}  // namespace tcell
