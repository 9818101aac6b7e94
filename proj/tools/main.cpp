#include <cstdio>
#include <string>
#include <vector>

#include "prefcone/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    prefcone::cli::RunResult r = prefcone::cli::run(args);
    if (!r.out.empty()) std::fwrite(r.out.data(), 1, r.out.size(), stdout);
    if (!r.err.empty()) std::fwrite(r.err.data(), 1, r.err.size(), stderr);
    return r.exit_code;
}
