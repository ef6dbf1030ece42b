// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "fswgnn/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fswgnn::Dispatch(args, std::cout, std::cerr);
}
