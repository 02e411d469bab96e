#pragma once

#include <optional>
#include <string>

#include "eigres/harness.hpp"

namespace eigres {

inline constexpr const char* kSchemaVersion = "eigres-1";

/// Everything one CLI invocation emits.
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  Table rows;
  std::optional<PowerLawFit> fit;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> notes;
  double timing_ms = 0.0;
};

/// Header row then one line per row, LF endings. The first column is always
/// schema_version; complex values appear as separate re/im columns. Reals use
/// 17 significant digits.
std::string to_csv(const OutputRecord& record);

/// Mirrors the CSV rows as objects keyed by column, plus fit/checks/notes.
/// Non-finite reals are written as the strings "inf", "-inf", "nan".
std::string to_json(const OutputRecord& record);

/// Writes via a temporary file and rename so readers never see partial output.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace eigres
