#include "bidiff/cli.hpp"

int main(int argc, char** argv) { return bidiff::run_cli(argc, argv); }
