#include <iostream>

#include "infodecomp/cli.hpp"

int main(int argc, char** argv) {
    return infodecomp::run_command_line(argc, argv, std::cout, std::cerr);
}
