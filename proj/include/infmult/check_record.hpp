#pragma once

#include <string>

#include <json.hpp>

namespace infmult {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

/// Outcome of one verification. `pass` is only ever set from an exact
/// canonical-form comparison or an exact rank/count.
struct CheckRecord {
  std::string id;
  std::string statement;
  std::string paper_ref;
  CheckStatus status = CheckStatus::skipped;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return status == CheckStatus::pass; }

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

void to_json(nlohmann::json& j, const CheckRecord& r);
void from_json(const nlohmann::json& j, CheckRecord& r);

}  // namespace infmult
