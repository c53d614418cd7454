#include "downup/cli.hpp"

int main(int argc, char** argv) { return downup::cli::run_main(argc, argv); }
