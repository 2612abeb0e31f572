#include "asmgal/cli.hpp"

int main(int argc, char** argv) { return asmgal::run_cli(argc, argv); }
