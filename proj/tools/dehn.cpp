#include "dehn/cli.hpp"

int main(int argc, char** argv) { return dehn::cli::run(argc, argv); }
