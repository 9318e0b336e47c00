#include <iostream>

#include "dbcc/cli.hpp"

int main(int argc, char** argv) {
    return dbcc::cli::run(argc, argv, std::cout, std::cerr);
}
