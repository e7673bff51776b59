#pragma once

#include <span>
#include <string>
#include <string_view>

#include "fibnum/serialize.hpp"
#include "fibnum/verify.hpp"

namespace fibnum {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,    // verification or acceptance failure
  kExitUsage = 2,     // bad arguments or input
  kExitInternal = 3,  // an internal cross-check disagreed
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// The `fibnum` subcommands. The executable only parses flags and forwards
// here. Digit strings are lsd-first unless `msd` is set, in which case both
// input and output are reversed.
CommandResult cmd_convert(std::string_view from, std::string_view to, std::string_view value, bool msd);
CommandResult cmd_add(std::string_view system, std::string_view x, std::string_view y, bool msd);
// Empty `out_path` writes the automaton to `out`.
CommandResult cmd_synth(std::string_view name, const std::string& out_path, Format format);
CommandResult cmd_verify(const VerifyScale& scale);
CommandResult cmd_accepts(const std::string& automaton_path, std::span<const std::string> words, bool msd);

}  // namespace fibnum
