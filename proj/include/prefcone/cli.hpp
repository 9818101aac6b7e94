#pragma once

#include <string>
#include <vector>

namespace prefcone::cli {

struct RunResult {
    int exit_code = 0;  // 0 success, 2 validation failure, 3 budget exceeded
    std::string out;    // the report (JSON or DOT), ready to write verbatim
    std::string err;    // diagnostics when the exit code is nonzero
};

// Runs one command; args exclude the program name. Reads the input file and
// builds the report in memory -- never writes anything itself, so callers
// (the binary, the tests) decide where bytes go.
RunResult run(const std::vector<std::string>& args);

}  // namespace prefcone::cli
