// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_CLI_H_
#define FSWGNN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace fswgnn {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitComputation = 2,
};

// Runs one command line (args excludes the program name). Structured output
// goes to `out` unless -o is given; diagnostics go to `err` as one line.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace fswgnn

#endif  // FSWGNN_CLI_H_
