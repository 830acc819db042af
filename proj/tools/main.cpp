#include "forbid/cli.hpp"

int main(int argc, char** argv) { return forbid::cli_main(argc, argv); }
