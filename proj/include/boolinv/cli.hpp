#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boolinv/map_analysis.hpp"

namespace boolinv::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes: decided (or no boolean verdict), decided negative, error.
inline constexpr int kExitDecided = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

struct Options {
  std::string command;
  int bound = 12;
  int jobs = 1;
  std::string format = "text";
  std::uint64_t max_enum = kDefaultEnumerationCap;
  /// Adds wall time and worker count to the result document.
  bool timing = false;
};

struct Outcome {
  int exit_code = kExitDecided;
  std::string out;
  std::string err;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand on the text of a problem file.
Outcome run(const Options& options, std::string_view problem_text);

/// Reads `path`, then behaves like run(); unreadable files exit with 2.
Outcome run_file(const Options& options, const std::string& path);

}  // namespace boolinv::cli
