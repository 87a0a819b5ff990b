#include <iostream>
#include <string>
#include <vector>

#include "bkit/cli.hpp"

int main(int argc, char** argv) {
    return bkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                          std::cerr);
}
