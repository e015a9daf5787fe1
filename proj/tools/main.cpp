#include "twistsieve/cli.hpp"

int main(int argc, char** argv) { return twistsieve::cli_run(argc, argv); }
