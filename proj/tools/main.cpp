#include "qmc/cli.hpp"

int main(int argc, char** argv) { return qmc::run_cli(argc, argv); }
