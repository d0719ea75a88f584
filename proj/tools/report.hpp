#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcodes/orbit_code.hpp"

namespace orbitcodes::cli {

inline constexpr int kReportSchemaVersion = 1;

/// An AnalysisReport plus what is needed to reproduce it.
struct ReportDocument {
  int schema_version = kReportSchemaVersion;
  std::string tool_version;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::optional<std::string> base_modulus;
  std::string polynomial;
  /// Canonical start rows as digit strings.
  std::vector<std::string> start;
  bool oracle_run = false;
  AnalysisReport analysis;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Pretty-printed JSON with sorted keys.
std::string serialize(const ReportDocument& doc);
/// Throws ParseError on malformed input or a schema version mismatch.
ReportDocument parse_report(std::string_view text);

}  // namespace orbitcodes::cli
