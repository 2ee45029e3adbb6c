#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcell/monoid.hpp"

namespace tcell {

/// Shared object store keyed by stable names. Builtin names ("trivial",
/// "chain<n>", "Z<n>", "S<n>", "bool-and") are materialized on first lookup;
/// everything else must be loaded or registered first. Addresses are stable
/// for the registry's lifetime, so callers hold plain pointers.
class Registry {
 public:
  /// Resolves a name, generating builtins on demand.
  /// Throws "unknown-monoid" if the name is neither known nor builtin.
  const FinMonoid* get(const std::string& name);

  /// Registers a validated monoid under its own name.
  /// Re-registering the same name with a different table is an error.
  const FinMonoid* add(FinMonoid m);

  /// Loads {"name","size","identity","table"} and registers it.
  const FinMonoid* load_json(const nlohmann::json& j);
  const FinMonoid* load_file(const std::string& path);

  bool contains(const std::string& name) const { return store_.count(name) > 0; }

 private:
  std::map<std::string, std::unique_ptr<const FinMonoid>> store_;
};

/// Canonical serialization: keys in the order name, size, identity, table;
/// table row-major.
nlohmann::ordered_json monoid_to_json(const FinMonoid& m);

/// Parses and validates a monoid document (without registering it).
FinMonoid monoid_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace tcell
