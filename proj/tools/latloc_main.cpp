// Thin process wrapper around run_cli; all behaviour lives in the library so
// tests can drive the same entry point in-process.

#include <iostream>
#include <string>
#include <vector>

#include "latloc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return latloc::run_cli(std::move(args), std::cout, std::cerr);
}
