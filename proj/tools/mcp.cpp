#include <iostream>

#include "mcp/cli.hpp"

int main(int argc, char** argv) { return mcp::run_command(argc, argv, std::cout, std::cerr); }
