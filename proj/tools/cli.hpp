#pragma once

#include <iosfwd>

namespace giambelli::cli {

  enum ExitCode : int
  {
    exit_ok = 0,
    exit_verification = 1,
    exit_usage = 2,
    exit_domain = 3
  };

  //! Full command-line entry point; writes results to `out`, diagnostics to
  //! `err`, and returns the process exit code.
  auto run_cli(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) -> int;

}  // namespace giambelli::cli
