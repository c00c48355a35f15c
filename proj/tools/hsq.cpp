#include <iostream>
#include <string>
#include <vector>

#include "hsq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hsq::cli::run(std::move(args), std::cout, std::cerr);
}
