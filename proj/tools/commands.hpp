#pragma once

// Command implementations behind the qclone executable. Each command writes
// data to `out` and diagnostics to `err` and returns a process exit code.

#include "qclone/qclone.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace qclone::cli {

enum class Command { verify, table, tradeoff, clone, entropy };
enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1; // a verification row failed
inline constexpr int kExitUsage = 2;  // bad flags or unreadable input

struct RunConfig {
  Command command = Command::verify;
  std::string family; ///< family name, preset name or family JSON
  std::string matrix; ///< AmplitudeMatrix JSON, inline or a file path
  std::string state;  ///< state JSON, inline or a file path
  std::size_t grid = 101;
  std::string out; ///< empty: write to the output stream
  Format format = Format::csv;
  std::optional<double> tolerance;
  std::string only; ///< substring filter on verification claim ids
};

Command command_from_string(const std::string& name);
Format format_from_string(const std::string& name);

/// Amplitude matrix for a preset name ("identity", "universal_qubit" or any
/// family name at its symmetric optimum) or a family JSON object.
AmplitudeMatrix matrix_from_family(const std::string& spec);

/// Inline JSON when the text starts with '{' or '[', otherwise file contents.
std::string load_text(const std::string& arg);

/// Resolves --out: relative paths go under $QCLONE_OUTPUT_DIR when set.
std::string resolve_output_path(const std::string& path);

/// Runs the configured command against the given streams (ignores cfg.out).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Like run(), but honours cfg.out by writing to that file instead.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace qclone::cli
