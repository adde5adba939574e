// cli.hpp
// Command-line front end. Exit codes: 0 success, 2 configuration error,
// 1 unexpected failure.

#pragma once

#include <string>
#include <vector>

namespace qmc {

int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without the program name

} // namespace qmc
