#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ballean::cli {

enum ExitCode : int {
  kPass = 0,          // pass or found
  kFail = 1,          // fail or unsat
  kInconclusive = 2,
  kError = 3,         // structural, schema or usage error
};

enum class Format { Json, Text };

struct RunOptions {
  std::string scenario_path;
  std::optional<std::string> output_path;
  Format format = Format::Json;
  /// Search budget; 0 leaves the scenario's own budget (or none).
  std::size_t max_steps = 0;
};

struct RunResult {
  int exit_code = kError;
  std::string report;
  /// One-line message for stderr when exit_code is kError.
  std::string diagnostic;
};

/// Loads a scenario document, runs its task and serializes the report.
/// Never throws; every failure maps to an exit code.
RunResult run_text(std::string_view scenario_text, const RunOptions& options);

/// run_text on the file at options.scenario_path. The report is returned
/// and, when an output path is set, also written there.
RunResult run(const RunOptions& options);

}  // namespace ballean::cli
