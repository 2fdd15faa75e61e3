// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// The dropin command line. Kept separate from main() so tests can drive it
// with captured streams.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dropin::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kIoError = 2, kBadFlags = 3 };

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dropin::cli
