#include "uvd/cli.hpp"

int main(int argc, char** argv) { return uvd::run_cli(argc, argv); }
