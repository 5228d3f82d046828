#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eltlab::cli {

enum ExitCode : int {
    Ok = 0,
    UsageError = 1,
    DomainError = 2,
    VerificationFailure = 3,
};

/// Runs one command. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eltlab::cli
