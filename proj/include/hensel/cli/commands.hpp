#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hensel/cli/json_io.hpp"

namespace hensel::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct RunResult {
  json document;
  int exit_code = kExitOk;
};

/// Runs one job. `doc` is a jobspec or an earlier output document; `command`
/// overrides its "command". Never throws: errors become error documents.
RunResult run_job(const json& doc, const std::optional<std::string>& command = std::nullopt);

/// As run_job on JSON text; unparsable text is a schema error.
RunResult run_text(std::string_view text, const std::optional<std::string>& command = std::nullopt);

/// Runs every document of `docs` (a JSON array) on up to `threads` workers.
/// Results keep input order; the exit code is the largest per-job code.
RunResult run_batch(const json& docs, unsigned threads, const std::optional<std::string>& command = std::nullopt);

/// Error document for `command` with code and detail.
json error_document(const std::string& command, const std::string& code, const std::string& detail);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string render(const json& document);

}  // namespace hensel::cli
