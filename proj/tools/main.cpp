#include "invsub/cli.hpp"

int main(int argc, char** argv) { return invsub::run_cli(argc, argv); }
