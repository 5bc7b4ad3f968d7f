#include "regen/cli.hpp"

int main(int argc, char** argv) { return regen::run_cli(argc, argv); }
