#include <iostream>

#include "gextreme/cli.hpp"

int main(int argc, char** argv) {
    return gextreme::cli::run_main(argc, argv, std::cout, std::cerr);
}
