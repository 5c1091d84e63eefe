#include "biplab/cli.hpp"

int main(int argc, char** argv) { return biplab::cli::run_main(argc, argv); }
