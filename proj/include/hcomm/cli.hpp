#pragma once

#include <string>
#include <vector>

#include "hcomm/error.hpp"

namespace hcomm {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,        // parse or spec error, or an operation undefined for the input
  kExitCap = 2,          // an order or enumeration cap was exceeded
  kExitInternal = 3,     // two computation routes disagreed
  kExitVerification = 4  // verify found unexpected outcomes
};

int exit_code_for(ErrorCode code);

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and captures output.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace hcomm
