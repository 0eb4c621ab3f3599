#include "usv/cli/commands.hpp"

int main(int argc, char** argv) { return usv::cli::run_cli(argc, argv); }
