#ifndef CLI_SCRIPT_HPP
#define CLI_SCRIPT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "cli/parse.hpp"
#include "systemf/print.hpp"

namespace cli {

struct RunOptions {
  std::uint64_t steps = 1'000'000;
  systemf::Syntax syntax = systemf::Syntax::unicode;
  /// Report VarPosMap lookups to the diagnostic stream when done.
  bool debug = false;
};

enum ExitCode : int { exit_ok = 0, exit_user_error = 1, exit_budget = 2 };

/// Runs statements in order, stopping at the first failure, which is
/// reported as `file:line:col: code: message`.
int run(const Script& script, const RunOptions& opts, std::ostream& out, std::ostream& err,
        const std::string& filename);

/// Parses then runs.
int run_source(std::string_view source, const std::string& filename, const RunOptions& opts,
               std::ostream& out, std::ostream& err);

}  // namespace cli

#endif  // CLI_SCRIPT_HPP
