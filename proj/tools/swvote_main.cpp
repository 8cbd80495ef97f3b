#include <iostream>
#include <string>
#include <vector>

#include "swvote/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return swvote::cli_run(args, std::cout, std::cerr);
}
