#include <iostream>
#include <string>
#include <vector>

#include "schurcurv/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return schurcurv::run_cli(args, std::cout, std::cerr);
}
