#include <iostream>

#include "lightclock/cli/commands.hpp"

int main(int argc, char** argv) { return lightclock::cli::run(argc, argv, std::cout, std::cerr); }
