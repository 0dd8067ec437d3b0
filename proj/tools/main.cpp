#include <iostream>

#include "lpc/cli.hpp"

int main(int argc, char** argv) {
    return lpc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
