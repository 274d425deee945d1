#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "infmult/check_record.hpp"
#include "infmult/scalar.hpp"

namespace infmult {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class OutputFormat { text, json };

/// Suites accepted by `verify <suite>`.
const std::vector<std::string>& suite_names();

struct RunConfig {
  std::size_t n = 3;
  unsigned lmax = 4;
  std::optional<Rational> lambda;  // nullopt = formal
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  OutputFormat format = OutputFormat::text;
  std::string suite = "all";
  unsigned jobs = 1;
  bool timing = false;

  /// Throws std::invalid_argument on n < 2 or an unknown suite.
  void validate() const;
  nlohmann::json to_json() const;
};

struct Report {
  std::string version = kToolVersion;
  int schema = kReportSchemaVersion;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckRecord> checks;  // sorted by id
  /// Wall time in milliseconds per check id; only serialized when timing was requested.
  std::map<std::string, double> wall_ms;

  std::size_t count(CheckStatus s) const;
  /// 0 when no check failed, 1 otherwise.
  int exit_status() const { return count(CheckStatus::fail) == 0 ? 0 : 1; }

  friend bool operator==(const Report&, const Report&) = default;
};

Report run_suite(const RunConfig& config);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

std::string emit_report(const Report& r, OutputFormat format);

}  // namespace infmult
