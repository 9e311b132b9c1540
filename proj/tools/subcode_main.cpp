#include "subcode/cli.hpp"

int main(int argc, char** argv) { return subcode::cli::run_main(argc, argv); }
