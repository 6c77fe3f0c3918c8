#include <iostream>

#include "nssbound/cli.hpp"

int main(int argc, char** argv) { return nssbound::run_cli(argc, argv, std::cout, std::cerr); }
