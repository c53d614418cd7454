#pragma once

#include <string>
#include <vector>

namespace downup::cli {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs one subcommand. Exit codes: 0 when all checks pass, 1 on usage,
// parse, or domain errors, 2 when a verification check fails. Never throws;
// all diagnostics land in the output string.
RunResult run_command(const std::vector<std::string>& args);

// main() adapter: prints the output and returns the exit code.
int run_main(int argc, char** argv);

}  // namespace downup::cli
