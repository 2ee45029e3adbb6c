#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace tcell {

// Every failure carries a stable machine-readable code plus a JSON detail
// payload (witnesses, offending indices). The CLI maps codes to exit status;
// tests match on codes instead of message text.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        nlohmann::ordered_json detail = nlohmann::ordered_json::object())
      : std::runtime_error(message),
        code_(std::move(code)),
        detail_(std::move(detail)) {}

  const std::string& code() const { return code_; }
  const nlohmann::ordered_json& detail() const { return detail_; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["error"] = code_;
    j["message"] = what();
    if (!detail_.empty()) j["detail"] = detail_;
    return j;
  }

 private:
  std::string code_;
  nlohmann::ordered_json detail_;
};

}  // namespace tcell
