#include "cli/commands.hpp"

int main(int argc, char** argv) { return cognates::cli::run(argc, argv); }
