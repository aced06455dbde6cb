#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "intcat/cli/build.hpp"

namespace intcat::cli {

inline constexpr const char* kEngineVersion = "intcat 0.1.0";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

struct Report {
  /// The machine-readable payload; see README for the field list.
  Json data;
  /// Wall time per task in milliseconds, same order as data["tasks"]. Kept out
  /// of the machine format so it stays byte-deterministic.
  std::vector<double> millis;
  bool engine_fault = false;
};

/// Lowercase hex SHA-256 of the input text.
std::string sha256_hex(std::string_view text);

/// A report with no declarations and no tasks.
Report empty_report(std::string_view input, const Options& options);

/// Builds every declaration, then runs the selected tasks in declaration order.
/// Refusals and per-task errors are recorded; nothing aborts later tasks.
Report run(const SpecDocument& doc, std::string_view input, const Options& options);

/// Declaration statuses only, no tasks.
Report validate_document(const SpecDocument& doc, std::string_view input, const Options& options);

enum class Format { human, machine };
std::string emit(const Report& report, Format format);

/// What each declaration depends on and what each task will compute.
std::string explain(const SpecDocument& doc);

}  // namespace intcat::cli
