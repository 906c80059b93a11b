#include <iostream>

#include "entclone/cli.hpp"

int main(int argc, char** argv) {
    return entclone::cli::run_cli(argc, argv, std::cout, std::cerr);
}
