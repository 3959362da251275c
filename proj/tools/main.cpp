#include "vortexab/cli.hpp"

int main(int argc, char** argv) { return vortexab::cli::run_main(argc, argv); }
