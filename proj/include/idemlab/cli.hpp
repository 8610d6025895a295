#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "idemlab/algebra.hpp"

namespace idemlab {

  // Exit codes of the command-line tool.
  inline constexpr int exit_pass  = 0;
  inline constexpr int exit_fail  = 1;
  inline constexpr int exit_usage = 2;

  // Reads and validates an algebra file. Throws Error if the file cannot be
  // read and ParseError (with line and column) if it is malformed.
  Algebra load_algebra(std::filesystem::path const& path);

  // Runs the tool with `args` (without the program name). Reports go to
  // `out`, diagnostics to `err`.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace idemlab
