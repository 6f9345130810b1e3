#include <iostream>

#include "zzpa/cli.hpp"

int main(int argc, char** argv) {
    return zzpa::run_cli(argc, argv, std::cout, std::cerr);
}
