#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsg/serialize.hpp"

namespace nsg::cli {

enum class Format { Table, Json, Csv };

struct CommandRequest {
  std::vector<std::string> path;  // e.g. {"tree", "count"}
  std::vector<std::string> args;  // positionals
  std::map<std::string, std::string> flags;
  Format format = Format::Table;
  unsigned jobs = 1;
  std::int64_t budget_ms = 0;
};

struct RunReport {
  bool ok = true;
  Json payload;  // the operation result, or the error object
  std::int64_t elapsed_ms = 0;
  std::string tool_version = NSG_VERSION;
  int exit_code = 0;
};

/// 0 ok, 1 internal error, 2 bad input, 3 domain error, 4 budget exceeded.
int exit_code_for(ErrorCode code) noexcept;

/// Runs the operation the path names. Never throws.
RunReport execute(const CommandRequest& request);

/// Writes the report. Table and CSV errors go to err; JSON always goes to out.
void render(const RunReport& report, Format format, bool timing, std::ostream& out, std::ostream& err);

/// Parses argv, executes and renders; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// All dispatchable command paths, joined by spaces.
std::vector<std::string> command_paths();

}  // namespace nsg::cli
