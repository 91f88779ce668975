#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sltaylor_cli/config.hpp"

namespace sltaylor::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumericalFailure = 3;

struct OutputFile {
  std::string name;
  std::string content;
};

struct RunResult {
  int exit_code = kExitSuccess;
  /// Files in the order they are written; the manifest is not included.
  std::vector<OutputFile> files;
  std::vector<std::string> warnings;
  /// Error text when exit_code != 0.
  std::string message;
};

/// Runs one command entirely in memory. Never touches the filesystem
/// except to read CSV inputs named by the config.
RunResult execute(const RunConfig& config, std::ostream* log = nullptr);

/// Manifest document for a finished run.
std::string manifest_json(const RunConfig& config, const std::string& config_sha256, const RunResult& result);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

struct Invocation {
  std::filesystem::path config_path;
  std::optional<std::filesystem::path> out_dir;
  /// When set, must equal the command named in the config.
  std::optional<std::string> command;
  bool verbose = false;
};

/// Full batch run: read config, execute, write outputs and manifest.json.
/// Nothing is written unless the run succeeds. Returns the process exit code.
int run(const Invocation& inv, std::ostream& err);

}  // namespace sltaylor::cli
