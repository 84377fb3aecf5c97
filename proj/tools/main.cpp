#include <iostream>
#include <string>
#include <vector>

#include "grlab/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    grlab::CommandResult res = grlab::run_command(args);
    std::cout << res.output;
    return res.exit_code;
}
