#include <iostream>

#include "godp/cli.hpp"

int main(int argc, char** argv) { return godp::run_command_line(argc, argv, std::cout, std::cerr); }
