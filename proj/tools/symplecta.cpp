#include "symplecta/cli.hpp"

int main(int argc, char** argv) { return symplecta::cli::run(argc, argv); }
