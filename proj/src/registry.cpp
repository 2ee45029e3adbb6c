#include "tcell/registry.hpp"

#include <fstream>

#include "tcell/error.hpp"

namespace tcell {

namespace {

// "chain3" -> 3, "" on mismatch.
int parse_sized(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return -1;
  const std::string num = name.substr(prefix.size());
  if (num.empty()) return -1;
  for (char c : num)
    if (c < '0' || c > '9') return -1;
  try {
    return std::stoi(num);
  } catch (...) {
    return -1;
  }
}

std::optional<FinMonoid> make_builtin(const std::string& name) {
  if (name == "trivial") {
    FinMonoid m = make_chain(1);
    m.name = "trivial";
    return m;
  }
  if (name == "bool-and") return make_bool_and();
  if (int n = parse_sized(name, "chain"); n >= 1) return make_chain(n);
  if (int n = parse_sized(name, "Z"); n >= 1) return make_cyclic(n);
  if (int n = parse_sized(name, "S"); n >= 1 && n <= 5) return make_symmetric(n);
  return std::nullopt;
}

}  // namespace

const FinMonoid* Registry::get(const std::string& name) {
  auto it = store_.find(name);
  if (it != store_.end()) return it->second.get();
  if (auto m = make_builtin(name)) return add(std::move(*m));
  throw Error("unknown-monoid", "no monoid named '" + name + "'", {{"name", name}});
}

const FinMonoid* Registry::add(FinMonoid m) {
  auto it = store_.find(m.name);
  if (it != store_.end()) {
    if (it->second->table != m.table || it->second->identity != m.identity)
      throw Error("name-clash", "a different monoid is already registered as '" + m.name + "'");
    return it->second.get();
  }
  auto owned = std::make_unique<const FinMonoid>(std::move(m));
  const FinMonoid* ptr = owned.get();
  store_.emplace(ptr->name, std::move(owned));
  return ptr;
}

const FinMonoid* Registry::load_json(const nlohmann::json& j) {
  return add(monoid_from_json(j));
}

const FinMonoid* Registry::load_file(const std::string& path) {
  return load_json(read_json_file(path));
}

nlohmann::ordered_json monoid_to_json(const FinMonoid& m) {
  nlohmann::ordered_json j;
  j["name"] = m.name;
  j["size"] = m.size;
  j["identity"] = m.identity;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.size; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k < m.size; ++k) row.push_back(m.table[static_cast<size_t>(i) * m.size + k]);
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

FinMonoid monoid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("size") ||
      !j.contains("identity") || !j.contains("table"))
    throw Error("format", "monoid document needs name/size/identity/table");
  const std::string name = j.at("name").get<std::string>();
  const int size = j.at("size").get<int>();
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
  if (static_cast<int>(table.size()) != size)
    throw Error("format", "table row count does not match size");
  return validate_monoid(table, j.at("identity").get<int>(), name);
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open '" + path + "'", {{"path", path}});
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("format", std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return j;
}

}  // namespace tcell
