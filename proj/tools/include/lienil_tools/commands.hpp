#pragma once

// Subcommand implementations behind the lienil executable.  Each takes one
// JSON input document (with a "ring" descriptor) plus flag values and
// returns a JSON document, a human-readable rendering and an exit code.

#include <cstdint>
#include <optional>
#include <string>

#include "lienil/json_io.hpp"

namespace lienil::tools {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kCapExceeded = 3 };

struct CommandOptions {
  Json input;  // null when the command takes no input
  unsigned k = 1;
  std::string side = "right";
  std::size_t n = 0;  // 0: take from the input or the command default
  std::size_t d = 1;
  unsigned g = 0;
  unsigned root = 0;  // order of the root of unity e; 0: same as n
  std::optional<std::uint64_t> seed;
  std::string example;
  std::size_t threads = 0;
  bool timings = false;
};

struct CommandResult {
  Json doc;
  std::string text;
  int exit_code = kOk;
};

/// name is the full subcommand path, e.g. "transitive check" or "sdet".
CommandResult run_command(const std::string& name, const CommandOptions& options);

/// Exit code for an exception escaping run_command.
int exit_code_for(const std::exception& e);

}  // namespace lienil::tools
