#include "splitgen/cli.hpp"

int main(int argc, char** argv) { return splitgen::run_cli(argc, argv); }
