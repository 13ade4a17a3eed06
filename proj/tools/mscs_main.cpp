#include <iostream>

#include "mscs/cli.hpp"

int main(int argc, char** argv) {
    return mscs::cli_dispatch(argc, argv, std::cout, std::cerr);
}
