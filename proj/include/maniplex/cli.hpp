#pragma once

#include <string>
#include <vector>

namespace maniplex::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kMalformedJson = 3,
    kSchema = 4,
    kPrecondition = 5,
    kPipeline = 6,
    kSizeCap = 7,
};

struct CommandResult {
    int exit_code = kOk;
    std::string out;  // report or artifact, printed to stdout
    std::string err;  // diagnostics, printed to stderr
    std::vector<std::string> artifacts;  // files written
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace maniplex::cli
