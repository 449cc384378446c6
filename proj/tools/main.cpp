// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "dimerdiff/cli.hpp"

int main(int argc, char* argv[])
{
    return dimerdiff::run_cli(argc, argv, std::cout, std::cerr);
}
