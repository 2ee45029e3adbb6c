#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tcell {

struct Violation {
  std::string axiom;
  nlohmann::ordered_json witness;
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
};

/// Outcome of an exhaustive law check. Violations are data, not errors;
/// ok() iff none were found. `cap` bounds how many violations are stored,
/// never how far the search runs.
struct ViolationReport {
  std::vector<Violation> violations;
  long long checks = 0;       // individual law instances evaluated
  long long suppressed = 0;   // violations found beyond the storage cap
  long long cap = -1;         // -1: keep everything

  bool ok() const { return violations.empty() && suppressed == 0; }

  void record(Violation v) {
    if (cap >= 0 && static_cast<long long>(violations.size()) >= cap) {
      ++suppressed;
      return;
    }
    violations.push_back(std::move(v));
  }

  bool names_axiom(const std::string& id) const {
    for (const auto& v : violations)
      if (v.axiom == id) return true;
    return false;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
      nlohmann::ordered_json e;
      e["axiom"] = v.axiom;
      e["witness"] = v.witness;
      e["lhs"] = v.lhs;
      e["rhs"] = v.rhs;
      arr.push_back(std::move(e));
    }
    j["violations"] = std::move(arr);
    return j;
  }
};

}  // namespace tcell
