#include "tcell/context.hpp"

#include "tcell/error.hpp"

namespace tcell {

const std::vector<Hom>& Context::homs(const FinMonoid* A, const FinMonoid* B) const {
  auto key = std::make_pair(A, B);
  auto it = hom_cache_.find(key);
  if (it == hom_cache_.end()) it = hom_cache_.emplace(key, enumerate_homs(A, B)).first;
  return it->second;
}

const std::vector<Hom>& Context::homs(size_t a, size_t b) const {
  return homs(objects_[a], objects_[b]);
}

size_t Context::index_of(const FinMonoid* m) const {
  for (size_t i = 0; i < objects_.size(); ++i)
    if (same_monoid(objects_[i], m)) return i;
  throw Error("unknown-monoid", "object is not part of this context",
              {{"name", m ? m->name : "?"}});
}

}  // namespace tcell
